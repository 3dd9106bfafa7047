#pragma once

#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sob1d/chebfun.hpp"
#include "sob1d/interval.hpp"

namespace sob1d {

using Rational = boost::multiprecision::cpp_rational;

/// Complex number with exact rational real and imaginary parts.
struct GaussRational {
    Rational re{0};
    Rational im{0};

    GaussRational() = default;
    GaussRational(Rational r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
    GaussRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    [[nodiscard]] GaussRational conj() const { return {re, -im}; }
    /// |z|^2 = re^2 + im^2, exact.
    [[nodiscard]] Rational norm_sq() const { return re * re + im * im; }
    [[nodiscard]] Complex to_complex() const;

    GaussRational& operator+=(const GaussRational& o);
    GaussRational& operator*=(const GaussRational& o);

    friend GaussRational operator+(GaussRational x, const GaussRational& y) { return x += y; }
    friend GaussRational operator*(GaussRational x, const GaussRational& y) { return x *= y; }
    friend GaussRational operator-(const GaussRational& x) { return {-x.re, -x.im}; }
    friend bool operator==(const GaussRational&, const GaussRational&) = default;
};

/// Exact rational value of a finite double (every finite double is dyadic).
[[nodiscard]] Rational exact_rational(double x);

/// Parses "p", "p/q" or a finite decimal such as "-0.125"; anything else
/// (e.g. "pi", "sqrt(2)", "1e-3") is rejected as not a rational literal.
[[nodiscard]] Rational parse_rational(std::string_view text);

/// Interval with rational endpoints for the exact backend.
class ExactInterval {
public:
    ExactInterval(Rational a, Rational b);
    /// Endpoint literals go through parse_rational.
    static ExactInterval parse(std::string_view a, std::string_view b);
    /// Exact image of a floating-point interval.
    static ExactInterval from(const Interval& iv);

    [[nodiscard]] const Rational& a() const noexcept { return a_; }
    [[nodiscard]] const Rational& b() const noexcept { return b_; }
    [[nodiscard]] Rational length() const { return b_ - a_; }
    [[nodiscard]] Interval to_interval() const;

private:
    Rational a_;
    Rational b_;
};

/// Polynomial sum_k c_k x^k with Gaussian-rational coefficients on a rational
/// interval. All operations are exact.
class ExactPoly {
public:
    ExactPoly(ExactInterval iv, std::vector<GaussRational> coeffs);

    /// Builds u(x) = sum_k c_k s^k with s = (x - a) / (b - a), expanded to the
    /// monomial basis in x.
    static ExactPoly from_normalized(ExactInterval iv, const std::vector<GaussRational>& coeffs);

    [[nodiscard]] const ExactInterval& interval() const noexcept { return interval_; }
    [[nodiscard]] const std::vector<GaussRational>& coeffs() const noexcept { return coeffs_; }
    [[nodiscard]] std::size_t degree() const noexcept { return coeffs_.size() - 1; }

    [[nodiscard]] GaussRational operator()(const Rational& x) const;
    [[nodiscard]] ExactPoly scaled(const GaussRational& alpha) const;

private:
    void trim();

    ExactInterval interval_;
    std::vector<GaussRational> coeffs_;
};

[[nodiscard]] ExactPoly differentiate(const ExactPoly& u);
[[nodiscard]] ExactPoly differentiate(const ExactPoly& u, int order);
/// Throws InvalidArgument for x outside [a, b].
[[nodiscard]] GaussRational evaluate(const ExactPoly& u, const Rational& x);
[[nodiscard]] GaussRational evaluate(const ExactPoly& u, Endpoint e);

/// \int_a^b u conj(u) dx, exact.
[[nodiscard]] Rational integrate_l2sq(const ExactPoly& u);

/// Chebyshev image on the rounded interval. The series is computed exactly;
/// only the final coefficients are converted to double.
[[nodiscard]] ChebFunction to_chebfunction(const ExactPoly& u);

}  // namespace sob1d
