#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "sob1d/certificate.hpp"
#include "sob1d/families.hpp"
#include "sob1d/sharp.hpp"

namespace sob1d {

enum class ReportFormat { json, csv };

[[nodiscard]] ReportFormat parse_report_format(std::string_view name);

/// Batch certificate run. Functions live on [0, lambda] for every lambda.
struct RunConfig {
    std::vector<double> lambdas{0.1, 0.5, 1.0, 2.0, 10.0};
    std::vector<FamilyTemplate> families{
        parse_family_template("polynomial:max_degree=20"), parse_family_template("fourier:max_modes=8"),
        parse_family_template("gaussian_bump"), parse_family_template("runge")};
    std::size_t count = 1000;
    std::uint64_t seed = 1;
    std::vector<CertificateKind> kinds{std::begin(kAllCertificateKinds), std::end(kAllCertificateKinds)};
    std::vector<int> m_values{1, 2, 3, 4};  // trace_jet_m runs for each m >= 2
    std::string output;                     // empty: standard output
    ReportFormat format = ReportFormat::json;
};

/// Throws InvalidArgument on non-positive lambdas, count == 0, an empty
/// family list, or m outside 1..4.
void validate(const RunConfig& cfg);

/// Flat "key = value" text; '#' starts a comment. Keys: lambdas, families
/// (separated by ';' or whitespace), count, seed, kinds ("all" or names),
/// m, output, format. Unknown keys are an error.
[[nodiscard]] RunConfig parse_config(std::string_view text);
[[nodiscard]] RunConfig load_config(const std::filesystem::path& path);

struct KindSummary {
    std::size_t count = 0;
    std::size_t failures = 0;
    double max_ratio = 0.0;
};

struct SuiteReport {
    RunConfig config;
    std::vector<Certificate> certificates;  // ordered by (lambda, family, index, kind)
    std::map<std::string, KindSummary> by_kind;
    std::size_t failures = 0;

    [[nodiscard]] bool passed() const noexcept { return failures == 0; }
};

[[nodiscard]] SuiteReport run_suite(const RunConfig& cfg);

/// Every certificate the configuration asks for on one function, in the
/// canonical kind order.
[[nodiscard]] std::vector<Certificate> certify(const ChebFunction& u, const RunConfig& cfg);

[[nodiscard]] nlohmann::ordered_json to_json(const SuiteReport& report);
void write_report(const SuiteReport& report, std::ostream& out, ReportFormat format);

struct SharpRunEntry {
    double lambda = 0.0;
    std::string kind;
    std::optional<SharpEstimate> estimate;
    DominationReport domination;
    std::string error;  // solver failure message, empty on success

    [[nodiscard]] bool passed() const noexcept;
};

struct SharpRunReport {
    std::vector<SharpRunEntry> entries;

    [[nodiscard]] bool passed() const noexcept;
};

/// kinds holds QuotientSpec names; empty means all of them.
[[nodiscard]] SharpRunReport run_sharp(std::span<const double> lambdas, std::span<const std::string> kinds);

[[nodiscard]] nlohmann::ordered_json to_json(const SharpRunReport& report);
/// lambda,kind,paper_constant,sharp_estimate
void write_constant_curves(const SharpRunReport& report, std::ostream& out);

/// One row per lambda: lambda, c_trace0, c_poincare, c_friedrichs, c_equiv_lower, c_equiv_upper.
void write_constants_table(std::span<const double> lambdas, std::ostream& out);

}  // namespace sob1d
