// Acceptance suite: one pass/fail line per criterion, exit status 0 iff all pass.
//
// usage: acceptance <path-to-sob1d-cli> <work-dir>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "sob1d/certificate.hpp"
#include "sob1d/suite.hpp"

using namespace sob1d;
namespace fs = std::filesystem;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    Outcome() { detail << std::setprecision(12); }

    void require(bool ok, const std::string& what) {
        if (!ok && pass) detail << "first failure: " << what << "; ";
        pass = pass && ok;
    }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

bool close_rel(double value, double reference, double tol) {
    return std::abs(value - reference) <= tol * std::abs(reference);
}

// 1. Default sweep: every family, lambda and kind, zero failures, 5 minute budget.
void ac1(Outcome& o) {
    const auto start = std::chrono::steady_clock::now();
    const RunConfig cfg;
    const auto report = run_suite(cfg);
    const double elapsed = seconds_since(start);
    o.require(cfg.count == 1000 && cfg.lambdas.size() == 5 && cfg.families.size() == 4, "default configuration");
    o.require(report.failures == 0, std::to_string(report.failures) + " certificate failures");
    o.require(elapsed < 300.0, "runtime over budget");
    o.detail << report.certificates.size() << " certificates, " << report.failures << " failures, " << elapsed
             << " s";
}

// 2. Exact rational certificates agree with the spectral ones.
void ac2(Outcome& o) {
    std::mt19937_64 rng(2024);
    const std::vector<std::pair<Rational, Rational>> intervals = {
        {Rational(0), Rational(1)},        {Rational(0), Rational(1, 10)}, {Rational(-3, 2), Rational(1, 2)},
        {Rational(1, 7), Rational(15, 7)}, {Rational(-5), Rational(5)},    {Rational(2), Rational(5, 2)},
    };
    std::size_t agreed = 0;
    double worst = 0.0;
    const auto compare = [&](double f, const Rational& e, const std::string& what) {
        const double ed = oracle::to_double(e);
        const double rel = std::abs(f - ed) / std::abs(ed);
        worst = std::max(worst, rel);
        o.require(rel <= 1e-10, what + " value mismatch");
    };
    for (int trial = 0; trial < 200; ++trial) {
        const auto& [a, b] = intervals[static_cast<std::size_t>(trial) % intervals.size()];
        const ExactInterval iv(a, b);
        const auto degree = static_cast<std::size_t>(rng() % 13);
        std::vector<GaussRational> coeffs(degree + 1);
        const auto draw = [&] {
            const auto q = static_cast<long>(1 + rng() % 9);
            long p = static_cast<long>(rng() % static_cast<std::uint64_t>(2 * q + 1)) - q;
            if (p == 0) p = 1;
            return Rational(p, q);
        };
        for (auto& c : coeffs) c = GaussRational(draw(), draw());
        const auto exact = ExactPoly::from_normalized(iv, coeffs);

        const auto spectral = cheb_from_samples(
            iv.to_interval(),
            [&](double x) {
                // The double interval may round outward of the exact one.
                Rational r = exact_rational(x);
                if (r < iv.a()) r = iv.a();
                if (r > iv.b()) r = iv.b();
                return exact(r).to_complex();
            },
            exact.degree());
        const auto p = profile(spectral, 1);

        bool ok = true;
        for (auto e : {Endpoint::a, Endpoint::b}) {
            const auto f1 = check_endpoint_sq(p, e);
            const auto x1 = exact_check_endpoint_sq(exact, e);
            ok = ok && f1.pass == x1.pass;
            compare(f1.lhs, x1.lhs, "endpoint lhs");
            compare(f1.rhs, x1.rhs, "endpoint rhs");
            const auto f2 = check_poincare_smooth_sq(p, e);
            const auto x2 = exact_check_poincare_smooth_sq(exact, e);
            ok = ok && f2.pass == x2.pass;
            compare(f2.lhs, x2.lhs, "poincare_smooth lhs");
            compare(f2.rhs, x2.rhs, "poincare_smooth rhs");
        }
        const auto f3 = check_trace0(p);
        const auto x3 = exact_check_trace0_sq(exact);
        ok = ok && f3.pass == x3.pass;
        compare(f3.lhs * f3.lhs, x3.lhs, "trace0 lhs");
        compare(f3.rhs * f3.rhs, x3.rhs, "trace0 rhs");
        if (ok) ++agreed;
    }
    o.require(agreed == 200, "verdict disagreement");
    o.detail << agreed << "/200 verdicts agree, worst relative value difference " << worst;
}

// 3. Sharp Poincare constant 2 lambda / pi.
void ac3(Outcome& o) {
    for (double lambda : {0.5, 1.0, 2.0}) {
        const QuotientSpec spec{QuotientKind::poincare_dirichlet, Endpoint::a, Interval(0.0, lambda)};
        const double analytic = std::pow(kPi / (2.0 * lambda), 2);
        const double dense = oracle::dense_extremal(spec.kind, spec.endpoint, lambda, 64);
        o.require(close_rel(dense, analytic, 1e-3), "coarse dense oracle disagrees with the analytic eigenvalue");
        const auto q = discretize(spec, 64);
        o.require(close_rel(solve_extremal(q.a, q.b, q.target).value, dense, 1e-10), "coarse solver vs dense oracle");
        const auto est = estimate_sharp(spec);
        const double err = std::abs(est.value - 2.0 * lambda / kPi);
        o.require(err <= 1e-6, "estimate off at lambda " + std::to_string(lambda));
        o.detail << "lambda=" << lambda << " value=" << est.value << " err=" << err << "; ";
    }
}

// 4. Single-endpoint trace constant sqrt(coth 1).
void ac4(Outcome& o) {
    const double predicted = std::sqrt(1.0 / std::tanh(1.0));
    const double dense = std::sqrt(oracle::dense_extremal(QuotientKind::trace_single, Endpoint::a, 1.0, 500));
    o.require(std::abs(dense - predicted) <= 1e-5, "dense n=500 oracle does not reproduce sqrt(coth 1)");
    const auto est = estimate_sharp({QuotientKind::trace_single, Endpoint::a, Interval(0.0, 1.0)});
    o.require(std::abs(est.value - predicted) <= 1e-5, "estimate off");
    o.detail << "dense(500)=" << dense << " estimate=" << est.value << " predicted=" << predicted;
}

// 5. Every sharp estimate is dominated by its closed-form constant.
void ac5(Outcome& o) {
    double min_slack = INFINITY;
    std::size_t checked = 0;
    for (double lambda : {0.25, 1.0, 4.0}) {
        const Interval iv(0.0, lambda);
        const auto pc = paper_constants(iv);
        for (const auto& spec : all_quotients(iv)) {
            const auto r = compare_with_paper(estimate_sharp(spec), pc);
            o.require(r.dominated, spec.name() + " at lambda " + std::to_string(lambda));
            min_slack = std::min(min_slack, r.slack);
            ++checked;
        }
    }
    o.detail << checked << " (kind, lambda) pairs, minimum slack " << min_slack;
}

// 6. Spectral backend quality gates.
void ac6(Outcome& o) {
    const Interval pi_iv(0.0, kPi);
    const auto s = cheb_from_samples(pi_iv, [](double x) { return Complex{std::sin(x)}; }, 64);
    const auto ds = differentiate(s);
    double worst_derivative = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double x = std::min(kPi * i / 99.0, kPi);
        worst_derivative = std::max(worst_derivative, std::abs(evaluate(ds, x) - std::cos(x)));
    }
    o.require(worst_derivative <= 1e-11, "sine derivative");

    const Interval unit(0.0, 1.0);
    const auto x = cheb_from_samples(unit, [](double t) { return Complex{t}; }, 1);
    const double integral_err = std::abs(integrate_l2sq(x) - 1.0 / 3.0);
    o.require(integral_err <= 1e-14, "integral of x^2");

    std::mt19937_64 rng(6);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    double worst_roundtrip = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        const auto degree = static_cast<std::size_t>(trial % 21);
        std::vector<Complex> c(degree + 1);
        for (auto& v : c) v = {d(rng), d(rng)};
        const Interval iv(-1.0 + d(rng), 1.5 + d(rng));
        const auto horner = [&](double t) {
            const double s = (t - iv.a()) / iv.length();
            Complex acc = c.back();
            for (std::size_t k = degree; k-- > 0;) acc = acc * s + c[k];
            return acc;
        };
        const auto u = cheb_from_samples(iv, horner, degree);
        double scale = 0.0;
        for (const auto& v : c) scale += std::abs(v);
        for (int i = 0; i < 50; ++i) {
            const double t = iv.a() + iv.length() * (0.5 + 0.5 * d(rng));
            worst_roundtrip = std::max(worst_roundtrip, std::abs(evaluate(u, t) - horner(t)) / scale);
        }
    }
    o.require(worst_roundtrip <= 1e-13, "polynomial round trip");
    o.detail << "derivative err " << worst_derivative << ", integral err " << integral_err << ", round trip err "
             << worst_roundtrip;
}

// 7. Certificate ratios are invariant under u -> alpha u.
void ac7(Outcome& o) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> d(-5.0, 5.0);
    double worst = 0.0;
    std::size_t checked = 0;
    RunConfig cfg;
    const std::vector<std::string> templates = {"polynomial:max_degree=20", "fourier:max_modes=8", "gaussian_bump",
                                                "runge"};
    for (double lambda : {0.1, 1.0, 10.0}) {
        for (std::size_t f = 0; f < templates.size(); ++f) {
            const auto fd = instantiate(parse_family_template(templates[f]), Interval(0.0, lambda),
                                        derive_seed(7, f, static_cast<std::uint64_t>(lambda * 10)));
            const auto u = generate(fd);
            const auto base = certify(u, cfg);
            for (int k = 0; k < 10; ++k) {
                Complex alpha{d(rng), d(rng)};
                if (std::abs(alpha) < 1e-2) alpha = 1.0;
                const auto scaled = certify(alpha * u, cfg);
                o.require(scaled.size() == base.size(), "certificate count changed");
                for (std::size_t i = 0; i < base.size() && i < scaled.size(); ++i) {
                    const double diff = std::abs(scaled[i].ratio - base[i].ratio);
                    worst = std::max(worst, diff);
                    o.require(diff <= 1e-12, std::string(base[i].name()) + " ratio changed");
                    ++checked;
                }
            }
        }
    }
    o.detail << checked << " scaled certificates, worst ratio change " << worst;
}

// 8. Two CLI runs with the same config produce byte-identical JSON.
void ac8(Outcome& o, const std::string& cli, const fs::path& work) {
    fs::create_directories(work);
    const fs::path cfg = work / "determinism.cfg";
    std::ofstream(cfg) << "# determinism check\nlambdas = 0.1, 1, 10\ncount = 50\nseed = 20240601\nm = 1 2 3 4\n";
    std::string bytes[2];
    for (int run = 0; run < 2; ++run) {
        const fs::path out = work / ("run" + std::to_string(run) + ".json");
        fs::remove(out);
        const std::string cmd = "\"" + cli + "\" verify --config \"" + cfg.string() + "\" --out \"" + out.string() +
                                "\" 2>/dev/null";
        const int rc = std::system(cmd.c_str());
        o.require(rc == 0, "verify run " + std::to_string(run) + " exited with " + std::to_string(rc));
        std::ifstream in(out, std::ios::binary);
        std::ostringstream buf;
        buf << in.rdbuf();
        bytes[run] = buf.str();
    }
    o.require(!bytes[0].empty(), "empty report");
    o.require(bytes[0] == bytes[1], "reports differ");
    o.detail << bytes[0].size() << " bytes, identical=" << (bytes[0] == bytes[1] ? "yes" : "no");
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 3) {
        std::cerr << "usage: acceptance <sob1d-cli> <work-dir>\n";
        return 2;
    }
    const std::string cli = argv[1];
    const fs::path work = argv[2];

    const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
        {"AC1 zero-failure certificate sweep", ac1},
        {"AC2 exact-oracle agreement", ac2},
        {"AC3 sharp Poincare constant 2*lambda/pi", ac3},
        {"AC4 single-endpoint trace constant sqrt(coth 1)", ac4},
        {"AC5 domination of sharp constants", ac5},
        {"AC6 spectral backend quality gates", ac6},
        {"AC7 scale invariance of certificate ratios", ac7},
        {"AC8 byte-identical reports", [&](Outcome& o) { ac8(o, cli, work); }},
    };

    int failed = 0;
    for (const auto& [name, run] : criteria) {
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try {
            run(o);
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        if (!o.pass) ++failed;
        std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << name << " (" << seconds_since(start) << " s): "
                  << o.detail.str() << std::endl;
    }
    std::cout << (failed == 0 ? "all acceptance criteria passed" : std::to_string(failed) + " criteria failed")
              << std::endl;
    return failed == 0 ? 0 : 1;
}
