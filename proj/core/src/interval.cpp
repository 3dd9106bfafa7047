#include "sob1d/interval.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "sob1d/error.hpp"

namespace sob1d {

Interval::Interval(double a, double b) : a_(a), b_(b), lambda_(b - a) {
    if (!std::isfinite(a) || !std::isfinite(b)) {
        std::ostringstream os;
        os << "interval endpoints must be finite, got [" << a << ", " << b << "]";
        throw InvalidArgument(os.str());
    }
    if (!(a < b) || !(lambda_ > 0.0) || !std::isfinite(lambda_)) {
        std::ostringstream os;
        os << "interval requires a < b with finite length, got [" << a << ", " << b << "]";
        throw InvalidArgument(os.str());
    }
}

Interval make_interval(double a, double b) { return Interval(a, b); }

double trace0_constant(double lambda) { return std::sqrt(std::max(4.0 * lambda, 4.0 / lambda)); }

double poincare_constant(double lambda) {
    return std::sqrt(2.0) * std::max(std::sqrt(lambda), lambda);
}

double friedrichs_constant(double lambda) {
    const double cp = poincare_constant(lambda);
    return std::sqrt(2.0 * cp * cp + 1.0);
}

double trace_jet_constant(double lambda) {
    return std::sqrt(2.0 * std::max(4.0 * lambda, 4.0 / lambda));
}

PaperConstants paper_constants(const Interval& iv) {
    const double lambda = iv.length();
    PaperConstants pc{};
    pc.c_trace0 = trace0_constant(lambda);
    pc.c_poincare = poincare_constant(lambda);
    pc.c_friedrichs = friedrichs_constant(lambda);
    pc.c_equiv_lower = 1.0 / pc.c_friedrichs;
    pc.c_equiv_upper = std::sqrt(1.0 + pc.c_trace0 * pc.c_trace0);
    return pc;
}

}  // namespace sob1d
