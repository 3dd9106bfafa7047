#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "sob1d/interval.hpp"

namespace sob1d {

using Complex = std::complex<double>;

/// Highest derivative order accepted by differentiate/sobolev_norm/trace_jet.
inline constexpr int kMaxDerivativeOrder = 8;

/// Trailing Chebyshev coefficients smaller than this fraction of the largest
/// coefficient are dropped at construction.
inline constexpr double kChopTolerance = 1e-14;

/// A complex polynomial on [a, b] stored as a Chebyshev series in the
/// pulled-back variable t = (2x - a - b) / (b - a) in [-1, 1].
class ChebFunction {
public:
    /// The zero function.
    explicit ChebFunction(Interval iv);
    /// Takes ownership of the series; trailing coefficients under the
    /// chopping floor are removed, an empty series becomes zero.
    ChebFunction(Interval iv, std::vector<Complex> coeffs);

    static ChebFunction constant(Interval iv, Complex value);

    [[nodiscard]] const Interval& interval() const noexcept { return interval_; }
    [[nodiscard]] std::span<const Complex> coeffs() const noexcept { return coeffs_; }
    [[nodiscard]] std::size_t degree() const noexcept { return coeffs_.size() - 1; }
    [[nodiscard]] bool is_zero() const noexcept;

    /// Clenshaw evaluation; throws InvalidArgument for x outside [a, b].
    [[nodiscard]] Complex operator()(double x) const;

    ChebFunction& operator*=(Complex alpha);
    ChebFunction& operator+=(const ChebFunction& other);

    friend ChebFunction operator*(Complex alpha, ChebFunction u) { return u *= alpha; }
    friend ChebFunction operator+(ChebFunction u, const ChebFunction& v) { return u += v; }

private:
    void chop();

    Interval interval_;
    std::vector<Complex> coeffs_;
};

using SampleFn = std::function<Complex(double)>;

/// Interpolates f at the n + 1 Chebyshev-Lobatto points mapped to [a, b]
/// (the midpoint when n = 0). Polynomials of degree <= n are reproduced.
/// A non-finite sample is rejected with the index and abscissa of the node.
[[nodiscard]] ChebFunction cheb_from_samples(const Interval& iv, const SampleFn& f, std::size_t n);

/// Lobatto abscissae x_k = map(cos(k pi / n)), k = 0..n, ordered from b down to a.
[[nodiscard]] std::vector<double> lobatto_points(const Interval& iv, std::size_t n);

[[nodiscard]] ChebFunction differentiate(const ChebFunction& u);
/// order in [0, kMaxDerivativeOrder].
[[nodiscard]] ChebFunction differentiate(const ChebFunction& u, int order);

[[nodiscard]] Complex evaluate(const ChebFunction& u, double x);
[[nodiscard]] Complex evaluate(const ChebFunction& u, Endpoint e);

/// \int_a^b |u|^2 dx by Clenshaw-Curtis quadrature on 2 deg + 2 nodes, which
/// is exact for the degree-2deg integrand up to rounding.
[[nodiscard]] double integrate_l2sq(const ChebFunction& u);

/// Relative tolerance of the adaptive quadrature behind integrate_lp.
inline constexpr double kLpQuadratureTolerance = 1e-10;

/// \int_a^b |u|^p dx for p >= 1 by adaptive Gauss-Kronrod quadrature.
[[nodiscard]] double integrate_lp(const ChebFunction& u, double p);

/// Clenshaw-Curtis weights on [-1, 1] for the n + 1 Lobatto points.
[[nodiscard]] std::vector<double> clenshaw_curtis_weights(std::size_t n);

}  // namespace sob1d
