#include "sob1d/exact_poly.hpp"

#include <algorithm>
#include <cmath>
#include <regex>
#include <sstream>
#include <string>

#include "sob1d/error.hpp"

namespace sob1d {

namespace {

using boost::multiprecision::cpp_int;

// Decimal digits only; the cpp_int string constructor would read a leading
// zero as an octal prefix.
cpp_int decimal_integer(std::string digits) {
    bool negative = false;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
        negative = digits.front() == '-';
        digits.erase(0, 1);
    }
    digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size()));
    cpp_int v(digits.empty() ? std::string("0") : digits);
    return negative ? cpp_int(-v) : v;
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

std::vector<GaussRational> multiply_linear(const std::vector<GaussRational>& p, const Rational& c0,
                                           const Rational& c1) {
    // p(x) * (c0 + c1 x)
    std::vector<GaussRational> out(p.size() + 1);
    for (std::size_t k = 0; k < p.size(); ++k) {
        out[k] += p[k] * GaussRational(c0);
        out[k + 1] += p[k] * GaussRational(c1);
    }
    return out;
}

}  // namespace

Complex GaussRational::to_complex() const { return {to_double(re), to_double(im)}; }

GaussRational& GaussRational::operator+=(const GaussRational& o) {
    re += o.re;
    im += o.im;
    return *this;
}

GaussRational& GaussRational::operator*=(const GaussRational& o) {
    Rational r = re * o.re - im * o.im;
    Rational i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

Rational exact_rational(double x) {
    if (!std::isfinite(x)) throw InvalidArgument("cannot convert a non-finite double to a rational");
    if (x == 0.0) return Rational(0);
    int exponent = 0;
    const double mantissa = std::frexp(x, &exponent);
    const auto scaled = static_cast<long long>(std::ldexp(mantissa, 53));
    exponent -= 53;
    cpp_int num = scaled;
    cpp_int den = 1;
    if (exponent >= 0) {
        num <<= exponent;
    } else {
        den <<= -exponent;
    }
    return Rational(num, den);
}

Rational parse_rational(std::string_view text) {
    static const std::regex fraction(R"(^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$)");
    static const std::regex decimal(R"(^\s*([+-]?)(\d*)\.(\d*)\s*$)");
    const std::string s(text);
    std::smatch m;
    if (std::regex_match(s, m, fraction)) {
        const cpp_int num = decimal_integer(m[1].str());
        cpp_int den = 1;
        if (m[2].matched) den = decimal_integer(m[2].str());
        if (den == 0) throw InvalidArgument("zero denominator in rational literal '" + s + "'");
        return Rational(num, den);
    }
    if (std::regex_match(s, m, decimal) && (m[2].length() + m[3].length()) > 0) {
        cpp_int num = decimal_integer(m[2].str() + m[3].str());
        cpp_int den = 1;
        for (std::size_t i = 0; i < static_cast<std::size_t>(m[3].length()); ++i) den *= 10;
        if (m[1].str() == "-") num = -num;
        return Rational(num, den);
    }
    throw InvalidArgument("not a rational literal: '" + s + "'");
}

ExactInterval::ExactInterval(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {
    if (!(a_ < b_)) throw InvalidArgument("exact interval requires a < b");
}

ExactInterval ExactInterval::parse(std::string_view a, std::string_view b) {
    return {parse_rational(a), parse_rational(b)};
}

ExactInterval ExactInterval::from(const Interval& iv) { return {exact_rational(iv.a()), exact_rational(iv.b())}; }

Interval ExactInterval::to_interval() const { return Interval(to_double(a_), to_double(b_)); }

ExactPoly::ExactPoly(ExactInterval iv, std::vector<GaussRational> coeffs)
    : interval_(std::move(iv)), coeffs_(std::move(coeffs)) {
    trim();
}

void ExactPoly::trim() {
    while (coeffs_.size() > 1 && coeffs_.back() == GaussRational{}) coeffs_.pop_back();
    if (coeffs_.empty()) coeffs_.emplace_back();
}

ExactPoly ExactPoly::from_normalized(ExactInterval iv, const std::vector<GaussRational>& coeffs) {
    if (coeffs.empty()) return {std::move(iv), {}};
    const Rational inv_length = 1 / iv.length();
    const Rational shift = -iv.a() * inv_length;
    std::vector<GaussRational> acc{coeffs.back()};
    for (std::size_t k = coeffs.size() - 1; k-- > 0;) {
        acc = multiply_linear(acc, shift, inv_length);
        acc[0] += coeffs[k];
    }
    return {std::move(iv), std::move(acc)};
}

GaussRational ExactPoly::operator()(const Rational& x) const { return evaluate(*this, x); }

ExactPoly ExactPoly::scaled(const GaussRational& alpha) const {
    auto c = coeffs_;
    for (auto& v : c) v *= alpha;
    return {interval_, std::move(c)};
}

ExactPoly differentiate(const ExactPoly& u) {
    const auto& c = u.coeffs();
    if (c.size() <= 1) return {u.interval(), {}};
    std::vector<GaussRational> d(c.size() - 1);
    for (std::size_t k = 1; k < c.size(); ++k) d[k - 1] = c[k] * GaussRational(Rational(static_cast<long long>(k)));
    return {u.interval(), std::move(d)};
}

ExactPoly differentiate(const ExactPoly& u, int order) {
    if (order < 0 || order > kMaxDerivativeOrder) {
        std::ostringstream os;
        os << "derivative order " << order << " outside [0, " << kMaxDerivativeOrder << "]";
        throw InvalidArgument(os.str());
    }
    ExactPoly out = u;
    for (int j = 0; j < order; ++j) out = differentiate(out);
    return out;
}

GaussRational evaluate(const ExactPoly& u, const Rational& x) {
    const auto& iv = u.interval();
    if (x < iv.a() || x > iv.b()) throw InvalidArgument("exact evaluation point outside the interval");
    const auto& c = u.coeffs();
    GaussRational acc = c.back();
    const GaussRational gx(x);
    for (std::size_t k = c.size() - 1; k-- > 0;) {
        acc *= gx;
        acc += c[k];
    }
    return acc;
}

GaussRational evaluate(const ExactPoly& u, Endpoint e) {
    return evaluate(u, e == Endpoint::a ? u.interval().a() : u.interval().b());
}

Rational integrate_l2sq(const ExactPoly& u) {
    const auto& c = u.coeffs();
    const std::size_t n = c.size();
    const auto& a = u.interval().a();
    const auto& b = u.interval().b();

    // q_k = sum_{i+j=k} Re(c_i conj(c_j)); the imaginary parts cancel pairwise.
    std::vector<Rational> q(2 * n - 1, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) q[i + j] += c[i].re * c[j].re + c[i].im * c[j].im;
    }
    Rational total = 0;
    Rational pa = a;
    Rational pb = b;
    for (std::size_t k = 0; k < q.size(); ++k) {
        total += q[k] * (pb - pa) / Rational(static_cast<long long>(k + 1));
        pa *= a;
        pb *= b;
    }
    return total;
}

ChebFunction to_chebfunction(const ExactPoly& u) {
    const auto& iv = u.interval();
    const Rational mid = (iv.a() + iv.b()) / 2;
    const Rational half = iv.length() / 2;
    const auto& c = u.coeffs();

    // Monomial coefficients in t, where x = mid + half t.
    std::vector<GaussRational> in_t{c.back()};
    for (std::size_t k = c.size() - 1; k-- > 0;) {
        in_t = multiply_linear(in_t, mid, half);
        in_t[0] += c[k];
    }

    // Horner in the Chebyshev basis: t T_0 = T_1, t T_j = (T_{j+1} + T_{j-1}) / 2.
    std::vector<GaussRational> cheb{in_t.back()};
    const GaussRational one_half(Rational(1, 2));
    for (std::size_t k = in_t.size() - 1; k-- > 0;) {
        std::vector<GaussRational> next(cheb.size() + 1);
        for (std::size_t j = 0; j < cheb.size(); ++j) {
            if (j == 0) {
                next[1] += cheb[0];
            } else {
                next[j + 1] += cheb[j] * one_half;
                next[j - 1] += cheb[j] * one_half;
            }
        }
        next[0] += in_t[k];
        cheb = std::move(next);
    }

    std::vector<Complex> coeffs(cheb.size());
    for (std::size_t j = 0; j < cheb.size(); ++j) coeffs[j] = cheb[j].to_complex();
    return ChebFunction(iv.to_interval(), std::move(coeffs));
}

}  // namespace sob1d
