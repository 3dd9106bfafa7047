#pragma once

namespace sob1d {

/// The domain [a, b] together with its length lambda = b - a.
///
/// lambda is stored rather than recomputed so that every consumer sees the
/// same rounded value; the constructor is the only place it is formed.
class Interval {
public:
    /// Throws InvalidArgument unless a < b and both are finite.
    Interval(double a, double b);

    [[nodiscard]] double a() const noexcept { return a_; }
    [[nodiscard]] double b() const noexcept { return b_; }
    [[nodiscard]] double length() const noexcept { return lambda_; }

    [[nodiscard]] bool contains(double x) const noexcept { return a_ <= x && x <= b_; }

    friend bool operator==(const Interval&, const Interval&) = default;

private:
    double a_;
    double b_;
    double lambda_;
};

[[nodiscard]] Interval make_interval(double a, double b);

enum class Endpoint { a, b };

[[nodiscard]] constexpr const char* to_string(Endpoint e) noexcept { return e == Endpoint::a ? "a" : "b"; }

/// Explicit constants of the trace, Poincare and Friedrichs inequalities,
/// all functions of the interval length only.
struct PaperConstants {
    double c_trace0;       // sqrt(max{4 lambda, 4 / lambda})
    double c_poincare;     // sqrt(2) * max{sqrt(lambda), lambda}
    double c_friedrichs;   // sqrt(2 c_poincare^2 + 1)
    double c_equiv_lower;  // 1 / c_friedrichs
    double c_equiv_upper;  // sqrt(1 + c_trace0^2)
};

[[nodiscard]] double trace0_constant(double lambda);
[[nodiscard]] double poincare_constant(double lambda);
[[nodiscard]] double friedrichs_constant(double lambda);

/// Constant used for the simultaneous trace of u, u', ..., u^(m-1):
/// summing the order-zero bound over k double counts every middle
/// derivative, so the squared constant is 2 max{4 lambda, 4 / lambda}.
[[nodiscard]] double trace_jet_constant(double lambda);

[[nodiscard]] PaperConstants paper_constants(const Interval& iv);

}  // namespace sob1d
