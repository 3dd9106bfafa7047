#include "sob1d/sharp.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "sob1d/error.hpp"

namespace sob1d {

namespace {

/// LDL^T factorization of a symmetric positive definite tridiagonal matrix.
class TridiagonalCholesky {
public:
    explicit TridiagonalCholesky(const SymTridiagonal& m) : d_(m.size()), l_(m.size(), 0.0) {
        for (std::size_t i = 0; i < m.size(); ++i) {
            double pivot = m.diag[i];
            if (i > 0) {
                l_[i] = m.off[i - 1] / d_[i - 1];
                pivot -= l_[i] * m.off[i - 1];
            }
            if (!(pivot > 0.0) || !std::isfinite(pivot)) {
                std::ostringstream os;
                os << "matrix is not positive definite (pivot " << pivot << " at row " << i << ")";
                throw InvalidArgument(os.str());
            }
            d_[i] = pivot;
        }
    }

    [[nodiscard]] std::vector<double> solve(std::vector<double> x) const {
        const std::size_t n = d_.size();
        for (std::size_t i = 1; i < n; ++i) x[i] -= l_[i] * x[i - 1];
        for (std::size_t i = 0; i < n; ++i) x[i] /= d_[i];
        for (std::size_t i = n; i-- > 1;) x[i - 1] -= l_[i] * x[i];
        return x;
    }

private:
    std::vector<double> d_;
    std::vector<double> l_;
};

double dot(std::span<const double> x, std::span<const double> y) {
    return std::inner_product(x.begin(), x.end(), y.begin(), 0.0);
}

bool all_zero(const std::vector<double>& x) {
    for (double v : x) {
        if (v != 0.0) return false;
    }
    return true;
}

SymTridiagonal without_node(const SymTridiagonal& m, Endpoint e) {
    SymTridiagonal out = m;
    if (e == Endpoint::a) {
        out.diag.erase(out.diag.begin());
        out.off.erase(out.off.begin());
    } else {
        out.diag.pop_back();
        out.off.pop_back();
    }
    return out;
}

std::size_t node_index(Endpoint e, std::size_t nodes) { return e == Endpoint::a ? 0 : nodes - 1; }

}  // namespace

SymTridiagonal SymTridiagonal::identity(std::size_t n) { return diagonal(std::vector<double>(n, 1.0)); }

SymTridiagonal SymTridiagonal::diagonal(std::vector<double> d) {
    SymTridiagonal m(d.size());
    m.diag = std::move(d);
    return m;
}

std::vector<double> SymTridiagonal::apply(std::span<const double> x) const {
    const std::size_t n = size();
    std::vector<double> y(n);
    for (std::size_t i = 0; i < n; ++i) {
        double v = diag[i] * x[i];
        if (i > 0) v += off[i - 1] * x[i - 1];
        if (i + 1 < n) v += off[i] * x[i + 1];
        y[i] = v;
    }
    return y;
}

double SymTridiagonal::quadratic_form(std::span<const double> x) const { return dot(x, apply(x)); }

std::string QuotientSpec::name() const {
    switch (kind) {
        case QuotientKind::trace_both: return "trace_both";
        case QuotientKind::trace_single: return std::string("trace_single_") + to_string(endpoint);
        case QuotientKind::poincare_dirichlet: return std::string("poincare_dirichlet_") + to_string(endpoint);
        case QuotientKind::friedrichs_form: return std::string("friedrichs_form_") + to_string(endpoint);
    }
    return {};
}

QuotientSpec parse_quotient(const std::string& name, const Interval& iv) {
    for (const auto& spec : all_quotients(iv)) {
        if (spec.name() == name) return spec;
    }
    throw InvalidArgument("unknown quotient kind '" + name + "'");
}

std::vector<QuotientSpec> all_quotients(const Interval& iv) {
    std::vector<QuotientSpec> specs{{QuotientKind::trace_both, Endpoint::a, iv}};
    for (auto kind : {QuotientKind::trace_single, QuotientKind::poincare_dirichlet, QuotientKind::friedrichs_form}) {
        for (auto e : {Endpoint::a, Endpoint::b}) specs.push_back({kind, e, iv});
    }
    return specs;
}

DiscreteQuotient discretize(const QuotientSpec& spec, std::size_t n) {
    if (n < kMinGridSize) {
        std::ostringstream os;
        os << "grid size " << n << " below the minimum of " << kMinGridSize;
        throw InvalidArgument(os.str());
    }
    const std::size_t nodes = n + 1;
    const double h = spec.interval.length() / static_cast<double>(n);

    SymTridiagonal mass(nodes);
    SymTridiagonal stiffness(nodes);
    for (std::size_t e = 0; e < n; ++e) {
        mass.diag[e] += h / 3.0;
        mass.diag[e + 1] += h / 3.0;
        mass.off[e] = h / 6.0;
        stiffness.diag[e] += 1.0 / h;
        stiffness.diag[e + 1] += 1.0 / h;
        stiffness.off[e] = -1.0 / h;
    }
    SymTridiagonal h1 = mass;
    for (std::size_t i = 0; i < nodes; ++i) h1.diag[i] += stiffness.diag[i];
    for (std::size_t i = 0; i < n; ++i) h1.off[i] += stiffness.off[i];

    switch (spec.kind) {
        case QuotientKind::trace_both: {
            SymTridiagonal boundary(nodes);
            boundary.diag.front() = 1.0;
            boundary.diag.back() = 1.0;
            return {std::move(boundary), std::move(h1), Extremum::max};
        }
        case QuotientKind::trace_single: {
            SymTridiagonal boundary(nodes);
            boundary.diag[node_index(spec.endpoint, nodes)] = 1.0;
            return {std::move(boundary), std::move(h1), Extremum::max};
        }
        case QuotientKind::poincare_dirichlet:
            return {without_node(stiffness, spec.endpoint), without_node(mass, spec.endpoint), Extremum::min};
        case QuotientKind::friedrichs_form: {
            SymTridiagonal denominator = stiffness;
            denominator.diag[node_index(spec.endpoint, nodes)] += 1.0;
            return {std::move(mass), std::move(denominator), Extremum::max};
        }
    }
    throw InvalidArgument("unhandled quotient kind");
}

EigenPair solve_extremal(const SymTridiagonal& a, const SymTridiagonal& b, Extremum which, int max_iterations) {
    const std::size_t n = a.size();
    if (n == 0 || b.size() != n) throw InvalidArgument("eigenproblem matrices must be non-empty and of equal size");

    // max: x <- B^{-1} A x;  min: x <- A^{-1} B x.
    const TridiagonalCholesky factor(which == Extremum::max ? b : a);
    const SymTridiagonal& applied = which == Extremum::max ? a : b;
    const auto step = [&](const std::vector<double>& x) { return factor.solve(applied.apply(x)); };
    const auto normalize = [](std::vector<double>& x) {
        const double s = std::sqrt(dot(x, x));
        for (auto& v : x) v /= s;
    };
    // x^T C y / x^T C x with C the matrix applied before the solve, so that
    // y = theta x (max) or y = x / theta (min) for an eigenvector. C is a mass
    // or boundary form; the stiffness form x^T K x would lose ~n^2 eps to
    // cancellation and stall the stopping test.
    const auto estimate = [&](const std::vector<double>& x, const std::vector<double>& y) {
        const auto cx = applied.apply(x);
        const double r = dot(cx, y) / dot(cx, x);
        return which == Extremum::max ? r : 1.0 / r;
    };

    std::vector<double> x(n, 1.0);
    std::vector<double> y = step(x);
    if (all_zero(y)) {
        // Ramp with its B-projection onto the all-ones vector removed.
        std::vector<double> ramp(n);
        for (std::size_t i = 0; i < n; ++i) ramp[i] = static_cast<double>(i + 1);
        const auto b_ones = b.apply(x);
        const double coef = dot(ramp, b_ones) / dot(x, b_ones);
        for (std::size_t i = 0; i < n; ++i) ramp[i] -= coef * x[i];
        x = std::move(ramp);
        y = step(x);
        if (all_zero(y)) {
            normalize(x);
            return {0.0, std::move(x), 1};
        }
    }
    double theta = estimate(x, y);

    for (int it = 1; it <= max_iterations; ++it) {
        x = std::move(y);
        normalize(x);
        y = step(x);
        const double next = estimate(x, y);
        if (std::abs(next - theta) <= kEigenTolerance * std::abs(next)) return {next, std::move(x), it};
        theta = next;
    }
    std::ostringstream os;
    os << "extremal eigenpair did not converge within " << max_iterations << " iterations";
    throw ConvergenceError(os.str(), EigenPair{theta, std::move(x), max_iterations});
}

double rayleigh_quotient(const DiscreteQuotient& q, std::span<const double> x) {
    return q.a.quadratic_form(x) / q.b.quadratic_form(x);
}

double constant_from_eigenvalue(QuotientKind kind, double theta) {
    return kind == QuotientKind::poincare_dirichlet ? 1.0 / std::sqrt(theta) : std::sqrt(theta);
}

SharpEstimate estimate_sharp(const QuotientSpec& spec, std::span<const std::size_t> meshes) {
    if (meshes.size() < 2) throw InvalidArgument("sharp estimation needs at least two meshes");
    SharpEstimate est{spec, 0.0, {meshes.begin(), meshes.end()}, {}, false, 0.0};
    for (std::size_t n : meshes) {
        const auto q = discretize(spec, n);
        est.raw_values.push_back(solve_extremal(q.a, q.b, q.target).value);
    }
    const double coarse = est.raw_values[est.raw_values.size() - 2];
    const double fine = est.raw_values.back();
    const double r = static_cast<double>(meshes.back()) / static_cast<double>(meshes[meshes.size() - 2]);
    const double theta = fine + (fine - coarse) / (r * r - 1.0);

    est.value = constant_from_eigenvalue(spec.kind, theta);
    est.error_indicator = std::abs(constant_from_eigenvalue(spec.kind, fine) - est.value);
    est.extrapolated = est.error_indicator < kExtrapolationTolerance;
    return est;
}

double convergence_ratio(const SharpEstimate& est) {
    const auto& r = est.raw_values;
    if (r.size() < 3) throw InvalidArgument("convergence ratio needs three meshes");
    const std::size_t k = r.size() - 1;
    return (r[k - 1] - r[k - 2]) / (r[k] - r[k - 1]);
}

double paper_bound(QuotientKind kind, const PaperConstants& pc) {
    switch (kind) {
        case QuotientKind::trace_both:
        case QuotientKind::trace_single: return pc.c_trace0;
        case QuotientKind::poincare_dirichlet: return pc.c_poincare;
        case QuotientKind::friedrichs_form: return pc.c_friedrichs;
    }
    return 0.0;
}

DominationReport compare_with_paper(const SharpEstimate& est, const PaperConstants& pc) {
    DominationReport r;
    r.sharp = est.value;
    r.paper_constant = paper_bound(est.spec.kind, pc);
    r.slack = r.paper_constant / r.sharp;
    r.dominated = r.sharp <= r.paper_constant;
    return r;
}

nlohmann::ordered_json to_json(const SharpEstimate& est, const DominationReport& report) {
    nlohmann::ordered_json j;
    j["kind"] = est.spec.name();
    j["lambda"] = est.spec.interval.length();
    j["mesh_sizes"] = est.mesh_sizes;
    j["raw_values"] = est.raw_values;
    j["value"] = est.value;
    j["error_indicator"] = est.error_indicator;
    j["slack_vs_paper"] = report.slack;
    j["paper_constant"] = report.paper_constant;
    j["extrapolated"] = est.extrapolated;
    j["dominated"] = report.dominated;
    return j;
}

}  // namespace sob1d
