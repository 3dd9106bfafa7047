#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "sob1d/chebfun.hpp"
#include "sob1d/exact_poly.hpp"
#include "sob1d/norms.hpp"

namespace sob1d {

inline constexpr double kCertificateRelTol = 1e-12;
inline constexpr double kCertificateAbsTol = 1e-12;

enum class CertificateKind {
    endpoint_a_sq,       // |u(a)|^2 <= 2 lambda ||u'||^2 + (2 / lambda) ||u||^2
    endpoint_b_sq,       // same at b
    trace0,              // ||T0 u|| <= C_lambda ||u||_{H^1}
    trace_jet_m,         // ||T_{m-1} u|| <= C'_lambda ||u||_{H^m}
    poincare_smooth_sq,  // ||u||^2 <= 2 lambda^2 ||u'||^2 + 2 lambda |u(x0)|^2
    poincare,            // ||u|| <= C_P (||u'|| + |u(x0)|)
    friedrichs,          // ||u||_{H^1} <= c_F (||u'||^2 + |u(x0)|^2)^(1/2)
    equiv_upper,         // (||u'||^2 + |u(x0)|^2)^(1/2) <= sqrt(1 + C_lambda^2) ||u||_{H^1}
    equiv_lower,         // ||u||_{H^1} <= c_F (||u'||^2 + |u(x0)|^2)^(1/2)
};

inline constexpr CertificateKind kAllCertificateKinds[] = {
    CertificateKind::endpoint_a_sq, CertificateKind::endpoint_b_sq, CertificateKind::trace0,
    CertificateKind::trace_jet_m,   CertificateKind::poincare_smooth_sq, CertificateKind::poincare,
    CertificateKind::friedrichs,    CertificateKind::equiv_upper,   CertificateKind::equiv_lower,
};

[[nodiscard]] std::string_view to_string(CertificateKind kind) noexcept;
/// Throws InvalidArgument for an unknown name.
[[nodiscard]] CertificateKind parse_certificate_kind(std::string_view name);

struct CertificateMetadata {
    Interval interval;
    int m = 1;
    std::optional<Endpoint> x0;
    std::string function;
    std::uint64_t seed = 0;
};

/// One evaluated inequality instance.
struct Certificate {
    CertificateKind kind;
    double lhs = 0.0;
    double rhs = 0.0;
    double constant_used = 0.0;
    double ratio = 0.0;
    double margin = 0.0;
    bool pass = false;
    double tolerance = kCertificateRelTol;
    CertificateMetadata metadata;

    [[nodiscard]] std::string_view name() const noexcept { return to_string(kind); }
};

/// Applies the verdict rule: pass iff lhs <= rhs (1 + rel_tol) + abs_tol; when
/// rhs == 0 the ratio is reported as 0 and pass iff lhs <= abs_tol.
[[nodiscard]] Certificate judge(CertificateKind kind, double lhs, double rhs, double constant_used,
                                CertificateMetadata metadata);

/// L^2 norms of u, u', ..., u^(order) and their boundary values, computed
/// once and shared by every check on the same function.
struct FunctionProfile {
    Interval interval;
    std::vector<double> l2sq;          // l2sq[j] = \int |u^(j)|^2
    std::vector<TraceValue> boundary;  // boundary[j] = (u^(j)(a), u^(j)(b))

    [[nodiscard]] int max_order() const noexcept { return static_cast<int>(l2sq.size()) - 1; }
};

/// order in [1, kMaxDerivativeOrder].
[[nodiscard]] FunctionProfile profile(const ChebFunction& u, int order);

[[nodiscard]] Certificate check_endpoint_sq(const FunctionProfile& p, Endpoint endpoint);
[[nodiscard]] Certificate check_trace0(const FunctionProfile& p);
/// 2 <= m <= 4, and the profile must reach order m.
[[nodiscard]] Certificate check_trace_jet(const FunctionProfile& p, int m);
[[nodiscard]] Certificate check_poincare_smooth_sq(const FunctionProfile& p, Endpoint x0);
[[nodiscard]] Certificate check_poincare(const FunctionProfile& p, Endpoint x0);
[[nodiscard]] Certificate check_friedrichs(const FunctionProfile& p, Endpoint x0);
/// (equiv_lower, equiv_upper)
[[nodiscard]] std::pair<Certificate, Certificate> check_equiv(const FunctionProfile& p, Endpoint x0);

[[nodiscard]] Certificate check_endpoint_sq(const ChebFunction& u, Endpoint endpoint);
[[nodiscard]] Certificate check_trace0(const ChebFunction& u);
[[nodiscard]] Certificate check_trace_jet(const ChebFunction& u, int m);
[[nodiscard]] Certificate check_poincare_smooth_sq(const ChebFunction& u, Endpoint x0);
[[nodiscard]] Certificate check_poincare(const ChebFunction& u, Endpoint x0);
[[nodiscard]] Certificate check_friedrichs(const ChebFunction& u, Endpoint x0);
[[nodiscard]] std::pair<Certificate, Certificate> check_equiv(const ChebFunction& u, Endpoint x0);

/// Squared-form certificate decided in exact arithmetic with zero tolerance.
struct ExactCertificate {
    CertificateKind kind;
    std::optional<Endpoint> x0;
    Rational lhs;
    Rational rhs;
    bool pass = false;
};

[[nodiscard]] ExactCertificate exact_check_endpoint_sq(const ExactPoly& u, Endpoint endpoint);
/// |u(a)|^2 + |u(b)|^2 <= max{4 lambda, 4 / lambda} ||u||_{H^1}^2
[[nodiscard]] ExactCertificate exact_check_trace0_sq(const ExactPoly& u);
[[nodiscard]] ExactCertificate exact_check_poincare_smooth_sq(const ExactPoly& u, Endpoint x0);

/// Flat object: name, lhs, rhs, constant_used, ratio, margin, pass, tolerance,
/// a, b, lambda, m, x0, function, seed.
[[nodiscard]] nlohmann::ordered_json to_json(const Certificate& c);
[[nodiscard]] std::string csv_header();
[[nodiscard]] std::string to_csv_row(const Certificate& c);

/// Shortest decimal that round-trips to the same double.
[[nodiscard]] std::string format_double(double x);

}  // namespace sob1d
