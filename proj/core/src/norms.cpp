#include "sob1d/norms.hpp"

#include <cmath>
#include <sstream>

#include "sob1d/error.hpp"

namespace sob1d {

namespace {

void check_order(int m, int lowest) {
    if (m < lowest || m > kMaxDerivativeOrder) {
        std::ostringstream os;
        os << "Sobolev order " << m << " outside [" << lowest << ", " << kMaxDerivativeOrder << "]";
        throw InvalidArgument(os.str());
    }
}

}  // namespace

double trace_norm(const TraceValue& t) { return std::hypot(std::abs(t.at_a), std::abs(t.at_b)); }

double jet_norm(const TraceJet& jet) {
    double sum = 0.0;
    for (const auto& e : jet.entries) sum += std::norm(e.at_a) + std::norm(e.at_b);
    return std::sqrt(sum);
}

double sobolev_norm(const ChebFunction& u, int m, double p) {
    check_order(m, 0);
    if (!(p >= 1.0) || !std::isfinite(p)) {
        std::ostringstream os;
        os << "Sobolev exponent p must be finite and >= 1, got " << p;
        throw InvalidArgument(os.str());
    }
    if (p == 2.0) return std::sqrt(sobolev_norm_sq(u, m));

    double sum = 0.0;
    ChebFunction derivative = u;
    for (int j = 0; j <= m; ++j) {
        if (j > 0) derivative = differentiate(derivative);
        sum += integrate_lp(derivative, p);
    }
    return std::pow(sum, 1.0 / p);
}

double sobolev_norm_sq(const ChebFunction& u, int m) {
    check_order(m, 0);
    double sum = 0.0;
    ChebFunction derivative = u;
    for (int j = 0; j <= m; ++j) {
        if (j > 0) derivative = differentiate(derivative);
        sum += integrate_l2sq(derivative);
    }
    return sum;
}

TraceValue trace0(const ChebFunction& u) { return {evaluate(u, Endpoint::a), evaluate(u, Endpoint::b)}; }

TraceJet trace_jet(const ChebFunction& u, int m) {
    check_order(m, 1);
    TraceJet jet;
    jet.entries.reserve(static_cast<std::size_t>(m));
    ChebFunction derivative = u;
    for (int j = 0; j < m; ++j) {
        if (j > 0) derivative = differentiate(derivative);
        jet.entries.push_back(trace0(derivative));
    }
    return jet;
}

ExactTraceValue trace0(const ExactPoly& u) { return {evaluate(u, Endpoint::a), evaluate(u, Endpoint::b)}; }

Rational sobolev_norm_sq(const ExactPoly& u, int m) {
    check_order(m, 0);
    Rational sum = 0;
    ExactPoly derivative = u;
    for (int j = 0; j <= m; ++j) {
        if (j > 0) derivative = differentiate(derivative);
        sum += integrate_l2sq(derivative);
    }
    return sum;
}

}  // namespace sob1d
