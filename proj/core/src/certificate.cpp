#include "sob1d/certificate.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <sstream>

#include "sob1d/error.hpp"
#include "sob1d/interval.hpp"

namespace sob1d {

namespace {

constexpr std::array<std::string_view, 9> kKindNames = {
    "endpoint_a_sq", "endpoint_b_sq", "trace0",      "trace_jet_m", "poincare_smooth_sq",
    "poincare",      "friedrichs",    "equiv_upper", "equiv_lower",
};

CertificateMetadata meta(const FunctionProfile& p, int m, std::optional<Endpoint> x0) {
    return CertificateMetadata{p.interval, m, x0, {}, 0};
}

void require_order(const FunctionProfile& p, int order) {
    if (p.max_order() < order) {
        std::ostringstream os;
        os << "function profile reaches order " << p.max_order() << ", certificate needs " << order;
        throw InvalidArgument(os.str());
    }
}

double boundary_sq(const FunctionProfile& p, Endpoint e) { return std::norm(p.boundary[0].at(e)); }

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

std::string_view to_string(CertificateKind kind) noexcept { return kKindNames[static_cast<std::size_t>(kind)]; }

CertificateKind parse_certificate_kind(std::string_view name) {
    const auto it = std::find(kKindNames.begin(), kKindNames.end(), name);
    if (it == kKindNames.end()) throw InvalidArgument("unknown certificate kind '" + std::string(name) + "'");
    return static_cast<CertificateKind>(it - kKindNames.begin());
}

Certificate judge(CertificateKind kind, double lhs, double rhs, double constant_used, CertificateMetadata metadata) {
    const bool degenerate = rhs == 0.0;
    const double ratio = degenerate ? 0.0 : lhs / rhs;
    const bool pass = degenerate ? lhs <= kCertificateAbsTol
                                 : lhs <= rhs * (1.0 + kCertificateRelTol) + kCertificateAbsTol;
    return Certificate{kind, lhs, rhs, constant_used, ratio, rhs - lhs, pass, kCertificateRelTol, std::move(metadata)};
}

FunctionProfile profile(const ChebFunction& u, int order) {
    if (order < 1 || order > kMaxDerivativeOrder) {
        std::ostringstream os;
        os << "profile order " << order << " outside [1, " << kMaxDerivativeOrder << "]";
        throw InvalidArgument(os.str());
    }
    FunctionProfile p{u.interval(), {}, {}};
    p.l2sq.reserve(static_cast<std::size_t>(order) + 1);
    p.boundary.reserve(static_cast<std::size_t>(order) + 1);
    ChebFunction derivative = u;
    for (int j = 0; j <= order; ++j) {
        if (j > 0) derivative = differentiate(derivative);
        p.l2sq.push_back(integrate_l2sq(derivative));
        p.boundary.push_back(trace0(derivative));
    }
    return p;
}

Certificate check_endpoint_sq(const FunctionProfile& p, Endpoint endpoint) {
    require_order(p, 1);
    const double lambda = p.interval.length();
    const double lhs = boundary_sq(p, endpoint);
    const double rhs = 2.0 * lambda * p.l2sq[1] + (2.0 / lambda) * p.l2sq[0];
    const auto kind = endpoint == Endpoint::a ? CertificateKind::endpoint_a_sq : CertificateKind::endpoint_b_sq;
    return judge(kind, lhs, rhs, std::max(2.0 * lambda, 2.0 / lambda), meta(p, 1, endpoint));
}

Certificate check_trace0(const FunctionProfile& p) {
    require_order(p, 1);
    const double c = trace0_constant(p.interval.length());
    const double lhs = trace_norm(p.boundary[0]);
    const double rhs = c * std::sqrt(p.l2sq[0] + p.l2sq[1]);
    return judge(CertificateKind::trace0, lhs, rhs, c, meta(p, 1, std::nullopt));
}

Certificate check_trace_jet(const FunctionProfile& p, int m) {
    if (m < 2 || m > 4) {
        std::ostringstream os;
        os << "trace jet certificate needs 2 <= m <= 4, got " << m;
        throw InvalidArgument(os.str());
    }
    require_order(p, m);
    const double c = trace_jet_constant(p.interval.length());
    TraceJet jet;
    jet.entries.assign(p.boundary.begin(), p.boundary.begin() + m);
    double h_m = 0.0;
    for (int j = 0; j <= m; ++j) h_m += p.l2sq[static_cast<std::size_t>(j)];
    return judge(CertificateKind::trace_jet_m, jet_norm(jet), c * std::sqrt(h_m), c, meta(p, m, std::nullopt));
}

Certificate check_poincare_smooth_sq(const FunctionProfile& p, Endpoint x0) {
    require_order(p, 1);
    const double lambda = p.interval.length();
    const double lhs = p.l2sq[0];
    const double rhs = 2.0 * lambda * lambda * p.l2sq[1] + 2.0 * lambda * boundary_sq(p, x0);
    return judge(CertificateKind::poincare_smooth_sq, lhs, rhs, 2.0 * std::max(lambda, lambda * lambda),
                 meta(p, 1, x0));
}

Certificate check_poincare(const FunctionProfile& p, Endpoint x0) {
    require_order(p, 1);
    const double c = poincare_constant(p.interval.length());
    const double lhs = std::sqrt(p.l2sq[0]);
    const double rhs = c * (std::sqrt(p.l2sq[1]) + std::abs(p.boundary[0].at(x0)));
    return judge(CertificateKind::poincare, lhs, rhs, c, meta(p, 1, x0));
}

Certificate check_friedrichs(const FunctionProfile& p, Endpoint x0) {
    require_order(p, 1);
    const double c = friedrichs_constant(p.interval.length());
    const double lhs = std::sqrt(p.l2sq[0] + p.l2sq[1]);
    const double rhs = c * std::sqrt(p.l2sq[1] + boundary_sq(p, x0));
    return judge(CertificateKind::friedrichs, lhs, rhs, c, meta(p, 1, x0));
}

std::pair<Certificate, Certificate> check_equiv(const FunctionProfile& p, Endpoint x0) {
    require_order(p, 1);
    const auto pc = paper_constants(p.interval);
    const double h1 = std::sqrt(p.l2sq[0] + p.l2sq[1]);
    const double alt = std::sqrt(p.l2sq[1] + boundary_sq(p, x0));
    auto lower = judge(CertificateKind::equiv_lower, h1, pc.c_friedrichs * alt, pc.c_friedrichs, meta(p, 1, x0));
    auto upper = judge(CertificateKind::equiv_upper, alt, pc.c_equiv_upper * h1, pc.c_equiv_upper, meta(p, 1, x0));
    return {std::move(lower), std::move(upper)};
}

Certificate check_endpoint_sq(const ChebFunction& u, Endpoint endpoint) {
    return check_endpoint_sq(profile(u, 1), endpoint);
}
Certificate check_trace0(const ChebFunction& u) { return check_trace0(profile(u, 1)); }
Certificate check_trace_jet(const ChebFunction& u, int m) {
    if (m < 2 || m > 4) return check_trace_jet(FunctionProfile{u.interval(), {}, {}}, m);
    return check_trace_jet(profile(u, m), m);
}
Certificate check_poincare_smooth_sq(const ChebFunction& u, Endpoint x0) {
    return check_poincare_smooth_sq(profile(u, 1), x0);
}
Certificate check_poincare(const ChebFunction& u, Endpoint x0) { return check_poincare(profile(u, 1), x0); }
Certificate check_friedrichs(const ChebFunction& u, Endpoint x0) { return check_friedrichs(profile(u, 1), x0); }
std::pair<Certificate, Certificate> check_equiv(const ChebFunction& u, Endpoint x0) {
    return check_equiv(profile(u, 1), x0);
}

ExactCertificate exact_check_endpoint_sq(const ExactPoly& u, Endpoint endpoint) {
    const Rational lambda = u.interval().length();
    const ExactPoly du = differentiate(u);
    ExactCertificate c{endpoint == Endpoint::a ? CertificateKind::endpoint_a_sq : CertificateKind::endpoint_b_sq,
                       endpoint, evaluate(u, endpoint).norm_sq(),
                       2 * lambda * integrate_l2sq(du) + (2 / lambda) * integrate_l2sq(u)};
    c.pass = c.lhs <= c.rhs;
    return c;
}

ExactCertificate exact_check_trace0_sq(const ExactPoly& u) {
    const Rational lambda = u.interval().length();
    const Rational four_lambda = 4 * lambda;
    const Rational four_over = 4 / lambda;
    const Rational c_sq = four_lambda > four_over ? four_lambda : four_over;
    ExactCertificate c{CertificateKind::trace0, std::nullopt, trace0(u).norm_sq(), c_sq * sobolev_norm_sq(u, 1)};
    c.pass = c.lhs <= c.rhs;
    return c;
}

ExactCertificate exact_check_poincare_smooth_sq(const ExactPoly& u, Endpoint x0) {
    const Rational lambda = u.interval().length();
    ExactCertificate c{CertificateKind::poincare_smooth_sq, x0, integrate_l2sq(u),
                       2 * lambda * lambda * integrate_l2sq(differentiate(u)) +
                           2 * lambda * evaluate(u, x0).norm_sq()};
    c.pass = c.lhs <= c.rhs;
    return c;
}

std::string format_double(double x) {
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x);
    return std::string(buf.data(), res.ptr);
}

nlohmann::ordered_json to_json(const Certificate& c) {
    nlohmann::ordered_json j;
    j["name"] = std::string(c.name());
    j["lhs"] = c.lhs;
    j["rhs"] = c.rhs;
    j["constant_used"] = c.constant_used;
    j["ratio"] = c.ratio;
    j["margin"] = c.margin;
    j["pass"] = c.pass;
    j["tolerance"] = c.tolerance;
    j["a"] = c.metadata.interval.a();
    j["b"] = c.metadata.interval.b();
    j["lambda"] = c.metadata.interval.length();
    j["m"] = c.metadata.m;
    if (c.metadata.x0) {
        j["x0"] = to_string(*c.metadata.x0);
    } else {
        j["x0"] = nullptr;
    }
    j["function"] = c.metadata.function;
    j["seed"] = c.metadata.seed;
    return j;
}

std::string csv_header() {
    return "name,lhs,rhs,constant_used,ratio,margin,pass,tolerance,a,b,lambda,m,x0,function,seed";
}

std::string to_csv_row(const Certificate& c) {
    std::ostringstream os;
    os << c.name() << ',' << format_double(c.lhs) << ',' << format_double(c.rhs) << ','
       << format_double(c.constant_used) << ',' << format_double(c.ratio) << ',' << format_double(c.margin) << ','
       << (c.pass ? "true" : "false") << ',' << format_double(c.tolerance) << ','
       << format_double(c.metadata.interval.a()) << ',' << format_double(c.metadata.interval.b()) << ','
       << format_double(c.metadata.interval.length()) << ',' << c.metadata.m << ','
       << (c.metadata.x0 ? to_string(*c.metadata.x0) : "") << ',' << csv_escape(c.metadata.function) << ','
       << c.metadata.seed;
    return os.str();
}

}  // namespace sob1d
