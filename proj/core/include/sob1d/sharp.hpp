#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sob1d/interval.hpp"

namespace sob1d {

/// Symmetric tridiagonal matrix; off[i] couples rows i and i + 1.
struct SymTridiagonal {
    std::vector<double> diag;
    std::vector<double> off;

    SymTridiagonal() = default;
    explicit SymTridiagonal(std::size_t n) : diag(n, 0.0), off(n > 0 ? n - 1 : 0, 0.0) {}
    static SymTridiagonal identity(std::size_t n);
    static SymTridiagonal diagonal(std::vector<double> d);

    [[nodiscard]] std::size_t size() const noexcept { return diag.size(); }
    [[nodiscard]] std::vector<double> apply(std::span<const double> x) const;
    /// x^T M x
    [[nodiscard]] double quadratic_form(std::span<const double> x) const;
};

/// Which sharp constant a discretized Rayleigh quotient approximates.
enum class QuotientKind {
    trace_both,          // (|u(a)|^2 + |u(b)|^2) / ||u||_{H^1}^2
    trace_single,        // |u(e)|^2 / ||u||_{H^1}^2
    poincare_dirichlet,  // ||u||^2 / ||u'||^2 over u(x0) = 0
    friedrichs_form,     // ||u||^2 / (||u'||^2 + |u(x0)|^2)
};

struct QuotientSpec {
    QuotientKind kind;
    Endpoint endpoint = Endpoint::a;  // ignored for trace_both
    Interval interval;

    /// "trace_both", "trace_single_a", "poincare_dirichlet_b", ...
    [[nodiscard]] std::string name() const;
};

/// Parses a name produced by QuotientSpec::name.
[[nodiscard]] QuotientSpec parse_quotient(const std::string& name, const Interval& iv);
/// Every kind/endpoint combination on the interval.
[[nodiscard]] std::vector<QuotientSpec> all_quotients(const Interval& iv);

enum class Extremum { max, min };

/// Generalized eigenproblem A x = theta B x whose extremal eigenvalue is the
/// discrete Rayleigh quotient extremum.
struct DiscreteQuotient {
    SymTridiagonal a;
    SymTridiagonal b;
    Extremum target;
};

inline constexpr std::size_t kMinGridSize = 8;

/// Uniform P1 finite elements with n elements (n + 1 nodes). Boundary
/// evaluations become rank-one corner entries; a Dirichlet node is
/// eliminated. For poincare_dirichlet the pair is (stiffness, mass) with
/// target min, so the sharp constant is 1 / sqrt(theta).
[[nodiscard]] DiscreteQuotient discretize(const QuotientSpec& spec, std::size_t n);

struct EigenPair {
    double value = 0.0;
    std::vector<double> vector;
    int iterations = 0;
};

inline constexpr double kEigenTolerance = 1e-12;
inline constexpr int kMaxEigenIterations = 100000;

class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, EigenPair last)
        : std::runtime_error(what), last_(std::move(last)) {}
    [[nodiscard]] const EigenPair& last_iterate() const noexcept { return last_; }

private:
    EigenPair last_;
};

/// Extremal generalized eigenpair by power iteration on B^{-1} A (max, B SPD)
/// or inverse iteration on A^{-1} B (min, A SPD). Starts from the all-ones
/// vector; if that is annihilated, from a ramp B-orthogonalized against it.
/// Stops when the eigenvalue estimate changes by less than kEigenTolerance
/// relative; throws ConvergenceError, carrying the last iterate, after
/// max_iterations steps.
[[nodiscard]] EigenPair solve_extremal(const SymTridiagonal& a, const SymTridiagonal& b, Extremum which,
                                       int max_iterations = kMaxEigenIterations);

/// x^T A x / x^T B x
[[nodiscard]] double rayleigh_quotient(const DiscreteQuotient& q, std::span<const double> x);

inline const std::vector<std::size_t> kDefaultMeshes = {250, 500, 1000, 2000};
inline constexpr double kExtrapolationTolerance = 1e-6;

struct SharpEstimate {
    QuotientSpec spec;
    double value = 0.0;  // sharp constant in norm (square-root) form
    std::vector<std::size_t> mesh_sizes;
    std::vector<double> raw_values;  // extremal eigenvalue per mesh
    bool extrapolated = false;       // error_indicator < kExtrapolationTolerance
    double error_indicator = 0.0;    // |constant on finest mesh - value|
};

/// Converts an extremal eigenvalue to the norm-form constant of the quotient.
[[nodiscard]] double constant_from_eigenvalue(QuotientKind kind, double theta);

/// Solves on every mesh (coarse to fine, each a doubling of the previous)
/// and Richardson-extrapolates the last two eigenvalues assuming O(h^2).
[[nodiscard]] SharpEstimate estimate_sharp(const QuotientSpec& spec,
                                           std::span<const std::size_t> meshes = kDefaultMeshes);

/// (r[k-1] - r[k-2]) / (r[k] - r[k-1]) over the last three raw values; about
/// 4 for second-order convergence.
[[nodiscard]] double convergence_ratio(const SharpEstimate& est);

struct DominationReport {
    double sharp = 0.0;
    double paper_constant = 0.0;
    double slack = 0.0;  // paper_constant / sharp
    bool dominated = false;
};

/// Paper constant each quotient is bounded by: C_lambda for the traces, C_P
/// for poincare_dirichlet, c_F for friedrichs_form.
[[nodiscard]] double paper_bound(QuotientKind kind, const PaperConstants& pc);

[[nodiscard]] DominationReport compare_with_paper(const SharpEstimate& est, const PaperConstants& pc);

/// kind, lambda, mesh_sizes, raw_values, value, error_indicator, slack_vs_paper
/// plus endpoint, paper_constant, extrapolated and dominated.
[[nodiscard]] nlohmann::ordered_json to_json(const SharpEstimate& est, const DominationReport& report);

}  // namespace sob1d
