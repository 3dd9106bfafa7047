#include <benchmark/benchmark.h>

#include <cmath>

#include "sob1d/certificate.hpp"
#include "sob1d/families.hpp"
#include "sob1d/sharp.hpp"
#include "sob1d/suite.hpp"

namespace {

using namespace sob1d;

void BM_Interpolate(benchmark::State& state) {
    const Interval iv(0.0, 1.0);
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(cheb_from_samples(iv, [](double x) { return Complex{std::exp(-x * x)}; }, n));
    }
}
BENCHMARK(BM_Interpolate)->RangeMultiplier(2)->Range(16, 256);

void BM_IntegrateL2sq(benchmark::State& state) {
    const Interval iv(0.0, 1.0);
    const auto u = cheb_from_samples(iv, [](double x) { return Complex{std::sin(7 * x), x}; },
                                     static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(integrate_l2sq(u));
}
BENCHMARK(BM_IntegrateL2sq)->RangeMultiplier(2)->Range(16, 256);

void BM_CertifyFunction(benchmark::State& state) {
    const RunConfig cfg;
    const auto fd = instantiate(parse_family_template("runge"), Interval(0.0, 2.0), 42);
    const auto u = generate(fd);
    for (auto _ : state) benchmark::DoNotOptimize(certify(u, cfg));
}
BENCHMARK(BM_CertifyFunction);

void BM_SolveExtremal(benchmark::State& state) {
    const QuotientSpec spec{QuotientKind::trace_single, Endpoint::a, Interval(0.0, 1.0)};
    const auto q = discretize(spec, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(solve_extremal(q.a, q.b, q.target));
}
BENCHMARK(BM_SolveExtremal)->RangeMultiplier(2)->Range(250, 2000)->Unit(benchmark::kMillisecond);

void BM_EstimateSharp(benchmark::State& state) {
    const QuotientSpec spec{QuotientKind::poincare_dirichlet, Endpoint::a, Interval(0.0, 1.0)};
    for (auto _ : state) benchmark::DoNotOptimize(estimate_sharp(spec));
}
BENCHMARK(BM_EstimateSharp)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
