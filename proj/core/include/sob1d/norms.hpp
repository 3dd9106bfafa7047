#pragma once

#include <vector>

#include "sob1d/chebfun.hpp"
#include "sob1d/exact_poly.hpp"

namespace sob1d {

/// An element of L^2({a, b}): the boundary pair (phi(a), phi(b)).
struct TraceValue {
    Complex at_a{0.0};
    Complex at_b{0.0};

    [[nodiscard]] Complex at(Endpoint e) const noexcept { return e == Endpoint::a ? at_a : at_b; }

    friend TraceValue operator+(const TraceValue& x, const TraceValue& y) {
        return {x.at_a + y.at_a, x.at_b + y.at_b};
    }
    friend TraceValue operator*(Complex alpha, const TraceValue& x) { return {alpha * x.at_a, alpha * x.at_b}; }
};

/// sqrt(|phi(a)|^2 + |phi(b)|^2)
[[nodiscard]] double trace_norm(const TraceValue& t);

/// Boundary values of u, u', ..., u^(m-1); entry j holds the pair for u^(j).
struct TraceJet {
    std::vector<TraceValue> entries;
};

/// Euclidean product norm sqrt(sum_j trace_norm(entry_j)^2).
[[nodiscard]] double jet_norm(const TraceJet& jet);

/// (sum_{j=0}^m \int_a^b |u^(j)|^p)^(1/p). Throws for m outside
/// [0, kMaxDerivativeOrder] or p < 1.
[[nodiscard]] double sobolev_norm(const ChebFunction& u, int m, double p = 2.0);

/// ||u||_{H^m}^2 without the final square root.
[[nodiscard]] double sobolev_norm_sq(const ChebFunction& u, int m);

[[nodiscard]] TraceValue trace0(const ChebFunction& u);

/// Throws for m = 0 or m > kMaxDerivativeOrder.
[[nodiscard]] TraceJet trace_jet(const ChebFunction& u, int m);

// Exact counterparts on the rational backend (squared forms only).

struct ExactTraceValue {
    GaussRational at_a;
    GaussRational at_b;

    [[nodiscard]] const GaussRational& at(Endpoint e) const noexcept { return e == Endpoint::a ? at_a : at_b; }
    [[nodiscard]] Rational norm_sq() const { return at_a.norm_sq() + at_b.norm_sq(); }
};

[[nodiscard]] ExactTraceValue trace0(const ExactPoly& u);
[[nodiscard]] Rational sobolev_norm_sq(const ExactPoly& u, int m);

}  // namespace sob1d
