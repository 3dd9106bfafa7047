#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "sob1d/error.hpp"
#include "sob1d/families.hpp"

using namespace sob1d;

namespace {

bool same_coefficients(const ChebFunction& u, const ChebFunction& v) {
    const auto cu = u.coeffs();
    const auto cv = v.coeffs();
    if (cu.size() != cv.size()) return false;
    for (std::size_t k = 0; k < cu.size(); ++k) {
        if (cu[k] != cv[k]) return false;
    }
    return u.interval() == v.interval();
}

}  // namespace

TEST_CASE("constant polynomial") {
    FunctionDescriptor fd;
    fd.degree = 0;
    fd.coeff = 1.0;
    const auto u = generate(fd);
    CHECK(u.degree() == 0);
    CHECK(u(0.3) == Complex{1.0});
    fd.backend = Backend::exact;
    const auto ex = generate_exact(fd);
    CHECK(ex.degree() == 0);
    CHECK(ex.coeffs()[0] == GaussRational(Rational(1)));
}

TEST_CASE("generation is deterministic") {
    for (auto family : {Family::polynomial, Family::fourier, Family::gaussian_bump, Family::runge, Family::sin}) {
        FunctionDescriptor fd;
        fd.family = family;
        fd.degree = 7;
        fd.seed = 12345;
        fd.interval = Interval(-0.5, 2.0);
        CHECK(same_coefficients(generate(fd), generate(fd)));
        auto other = fd;
        other.seed = 12346;
        if (family != Family::sin) CHECK_FALSE(same_coefficients(generate(fd), generate(other)));
    }
}

TEST_CASE("fourier single mode") {
    const Interval iv(0.0, 1.0);
    const std::vector<Complex> cos_c{0.0, 0.0};
    const std::vector<Complex> sin_c{0.0, 1.0};
    const auto u = fourier_function(iv, cos_c, sin_c, 4 * 1 + 16);
    CHECK(std::abs(evaluate(u, 0.5) - 1.0) < 1e-12);
    CHECK(std::abs(evaluate(u, 0.25) - std::sin(std::numbers::pi / 4)) < 1e-12);
}

TEST_CASE("polynomial coefficients are dyadic and lie in the unit box") {
    FunctionDescriptor fd;
    fd.degree = 20;
    fd.seed = 99;
    fd.interval = Interval(1.0, 3.0);
    fd.backend = Backend::exact;
    const auto ex = generate_exact(fd);
    REQUIRE(ex.degree() <= 20);
    // Check through the normalized variable: p(a + lambda s) has coefficients in [-1, 1]^2 scaled by lambda^-k.
    const Rational lambda = ex.interval().length();
    const auto spectral = generate(FunctionDescriptor{fd.family, fd.degree, 0.5, 0.25, std::nullopt, fd.seed,
                                                      fd.interval, Backend::spectral, 0});
    const auto exact_cheb = to_chebfunction(ex);
    for (double x : {1.0, 1.7, 2.5, 3.0}) {
        CHECK(std::abs(spectral(x) - exact_cheb(x)) < 1e-11 * (1.0 + std::abs(exact_cheb(x))));
    }
    CHECK(lambda == Rational(2));
}

TEST_CASE("property: descriptor serialization round trips") {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> d(0.0, 1.0);
    const Family families[] = {Family::polynomial, Family::fourier, Family::gaussian_bump, Family::runge,
                               Family::sin,        Family::cos,     Family::exp};
    for (int trial = 0; trial < 300; ++trial) {
        FunctionDescriptor fd;
        fd.family = families[trial % 7];
        fd.degree = trial % 13;
        fd.center = d(rng);
        fd.width = 0.05 + d(rng);
        if (fd.family == Family::polynomial && trial % 3 == 0) fd.coeff = d(rng) - 0.5;
        fd.seed = rng();
        const double a = 10.0 * (d(rng) - 0.5);
        fd.interval = Interval(a, a + 0.01 + 5.0 * d(rng));
        if (fd.family == Family::polynomial && trial % 2 == 0) fd.backend = Backend::exact;
        fd.resolution = static_cast<std::size_t>(trial % 5) * 8;
        const auto text = to_string(fd);
        const auto back = parse_descriptor(text);
        REQUIRE(to_string(back) == text);
        REQUIRE(back.seed == fd.seed);
        REQUIRE(back.center == fd.center);
        REQUIRE(back.width == fd.width);
        REQUIRE(back.interval == fd.interval);
        REQUIRE(same_coefficients(generate(back), generate(fd)));
    }
}

TEST_CASE("template parsing") {
    const auto t = parse_family_template("polynomial:max_degree=12,backend=exact");
    CHECK(t.family == Family::polynomial);
    CHECK(t.max_degree == 12);
    CHECK(t.backend == Backend::exact);
    CHECK(to_string(t) == "polynomial:max_degree=12,backend=exact");
    CHECK(parse_family_template("fourier").max_degree == 8);
    CHECK(parse_family_template("fourier:modes=3").degree == 3);
    CHECK(to_string(parse_family_template("polynomial:degree=0,coeff=0")) == "polynomial:degree=0,coeff=0");
    CHECK(to_string(parse_family_template("runge")) == "runge");

    CHECK_THROWS_AS((void)parse_family_template("hermite"), InvalidArgument);
    CHECK_THROWS_AS((void)parse_family_template("runge:backend=exact"), InvalidArgument);
    CHECK_THROWS_AS((void)parse_family_template("fourier:max_degree=3"), InvalidArgument);
    CHECK_THROWS_AS((void)parse_family_template("polynomial:max_degree=-1"), InvalidArgument);
    CHECK_THROWS_AS((void)parse_family_template("polynomial:max_degree=abc"), InvalidArgument);
}

TEST_CASE("instantiate draws documented parameter ranges") {
    const Interval iv(0.0, 2.0);
    const auto poly = parse_family_template("polynomial:max_degree=5");
    const auto bump = parse_family_template("gaussian_bump");
    const auto runge = parse_family_template("runge");
    const auto fourier = parse_family_template("fourier:max_modes=4");
    for (std::uint64_t i = 0; i < 500; ++i) {
        const auto seed = derive_seed(3, 0, i);
        const auto p = instantiate(poly, iv, seed);
        REQUIRE(p.degree >= 0);
        REQUIRE(p.degree <= 5);
        REQUIRE(p.seed == seed);
        const auto f = instantiate(fourier, iv, seed);
        REQUIRE(f.degree >= 1);
        REQUIRE(f.degree <= 4);
        const auto g = instantiate(bump, iv, seed);
        REQUIRE(g.center >= 0.0);
        REQUIRE(g.center <= 1.0);
        REQUIRE(g.width >= 0.1);
        REQUIRE(g.width <= 0.5);
        const auto r = instantiate(runge, iv, seed);
        REQUIRE(r.width >= 0.1);
        REQUIRE(r.width <= 0.4);
    }
    CHECK(instantiate(parse_family_template("polynomial:degree=3"), iv, 1).degree == 3);
}

TEST_CASE("invalid descriptors are rejected") {
    FunctionDescriptor fd;
    fd.family = Family::gaussian_bump;
    fd.backend = Backend::exact;
    CHECK_THROWS_AS((void)generate(fd), InvalidArgument);
    CHECK_THROWS_AS((void)generate_exact(fd), InvalidArgument);
    fd.backend = Backend::spectral;
    fd.width = 0.0;
    CHECK_THROWS_AS((void)generate(fd), InvalidArgument);
    FunctionDescriptor neg;
    neg.degree = -1;
    CHECK_THROWS_AS((void)generate(neg), InvalidArgument);
    CHECK_THROWS_AS((void)parse_descriptor("polynomial:degree=2,colour=red"), InvalidArgument);
    CHECK_THROWS_AS((void)parse_descriptor("polynomial:a=1,b=0"), InvalidArgument);
    CHECK_THROWS_AS((void)parse_descriptor("laguerre:degree=2"), InvalidArgument);
}

TEST_CASE("generator reference values") {
    CHECK(kGeneratorName == "mt19937_64");
    Rng rng(5489);
    std::uint64_t v = 0;
    for (int i = 0; i < 10000; ++i) v = rng.next();
    CHECK(v == 9981545732273789042ULL);

    Rng r2(1);
    for (int i = 0; i < 1000; ++i) {
        const double u = r2.dyadic_unit();
        REQUIRE(u >= -1.0);
        REQUIRE(u <= 1.0);
        REQUIRE(u * 1048576.0 == std::floor(u * 1048576.0));
        const double w = r2.uniform(0.1, 0.5);
        REQUIRE(w >= 0.1);
        REQUIRE(w < 0.5);
        const int k = r2.uniform_int(-2, 3);
        REQUIRE(k >= -2);
        REQUIRE(k <= 3);
    }
    CHECK(derive_seed(1, 2, 3) != derive_seed(1, 2, 4));
    CHECK(derive_seed(1, 2, 3) == derive_seed(1, 2, 3));
}
