#include "doctest.h"

#include <cmath>
#include <limits>

#include "sob1d/error.hpp"
#include "sob1d/exact_poly.hpp"
#include "sob1d/interval.hpp"
#include "sob1d/norms.hpp"

using namespace sob1d;

TEST_CASE("make_interval stores endpoints and length") {
    const auto unit = make_interval(0.0, 1.0);
    CHECK(unit.a() == 0.0);
    CHECK(unit.b() == 1.0);
    CHECK(unit.length() == 1.0);
    CHECK(make_interval(-1.0, 1.0).length() == 2.0);
}

TEST_CASE("make_interval rejects degenerate and non-finite input") {
    CHECK_THROWS_AS((void)make_interval(1.0, 1.0), InvalidArgument);
    CHECK_THROWS_AS((void)make_interval(2.0, 1.0), InvalidArgument);
    CHECK_THROWS_AS((void)make_interval(std::nan(""), 1.0), InvalidArgument);
    CHECK_THROWS_AS((void)make_interval(0.0, std::numeric_limits<double>::infinity()), InvalidArgument);
    CHECK_THROWS_AS((void)make_interval(-1e308, 1e308), InvalidArgument);  // length overflows
}

TEST_CASE("paper constants at lambda = 1 and 4") {
    const auto one = paper_constants(make_interval(0.0, 1.0));
    CHECK(one.c_trace0 == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(one.c_poincare == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(one.c_friedrichs == doctest::Approx(std::sqrt(5.0)).epsilon(1e-15));
    CHECK(one.c_equiv_upper == doctest::Approx(std::sqrt(5.0)).epsilon(1e-15));
    CHECK(one.c_equiv_lower == doctest::Approx(1.0 / std::sqrt(5.0)).epsilon(1e-15));

    const auto four = paper_constants(make_interval(1.0, 5.0));
    CHECK(four.c_trace0 == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(four.c_poincare == doctest::Approx(4.0 * std::sqrt(2.0)).epsilon(1e-15));
}

TEST_CASE("friedrichs constant sqrt(5) holds on a brute-force grid of polynomials") {
    // Every polynomial of degree <= 3 with integer coefficients in [-2, 2] on
    // [0, 1], checked in exact arithmetic at both endpoints:
    //   ||u||_{H^1}^2 <= 5 (||u'||^2 + |u(x0)|^2).
    const ExactInterval iv(Rational(0), Rational(1));
    int checked = 0;
    for (int c0 = -2; c0 <= 2; ++c0)
        for (int c1 = -2; c1 <= 2; ++c1)
            for (int c2 = -2; c2 <= 2; ++c2)
                for (int c3 = -2; c3 <= 2; ++c3) {
                    const ExactPoly u(iv, {Rational(c0), Rational(c1), Rational(c2), Rational(c3)});
                    const Rational h1 = sobolev_norm_sq(u, 1);
                    const Rational du = integrate_l2sq(differentiate(u));
                    for (auto e : {Endpoint::a, Endpoint::b}) {
                        REQUIRE(h1 <= 5 * (du + evaluate(u, e).norm_sq()));
                    }
                    ++checked;
                }
    CHECK(checked == 625);
}

TEST_CASE("c_trace0 has its minimum 2 at lambda = 1 and blows up at both ends") {
    double prev = std::numeric_limits<double>::infinity();
    for (double l = 1e-3; l <= 1.0; l *= 1.1) {
        const double c = trace0_constant(l);
        CHECK(c < prev);
        prev = c;
    }
    CHECK(trace0_constant(1.0) == 2.0);
    prev = 2.0;
    for (double l = 1.05; l <= 1e3; l *= 1.1) {
        const double c = trace0_constant(l);
        CHECK(c > prev);
        prev = c;
    }
    CHECK(trace0_constant(1e-6) > 1e3);
    CHECK(trace0_constant(1e6) > 1e3);
}

TEST_CASE("c_poincare is nondecreasing and every constant is finite and positive") {
    double prev = 0.0;
    for (double l = 1e-6; l <= 1e6; l *= 1.3) {
        const auto pc = paper_constants(Interval(0.0, l));
        CHECK(pc.c_poincare >= prev);
        prev = pc.c_poincare;
        for (double c : {pc.c_trace0, pc.c_poincare, pc.c_friedrichs, pc.c_equiv_lower, pc.c_equiv_upper}) {
            CHECK(std::isfinite(c));
            CHECK(c > 0.0);
        }
    }
}
