#include "sob1d/suite.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <set>
#include <sstream>

#include "sob1d/error.hpp"

namespace sob1d {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<std::string> split_any(std::string_view s, std::string_view separators) {
    std::vector<std::string> out;
    std::string current;
    for (char c : s) {
        if (separators.find(c) != std::string_view::npos) {
            if (!current.empty()) out.push_back(std::move(current));
            current.clear();
        } else {
            current += c;
        }
    }
    if (!current.empty()) out.push_back(std::move(current));
    return out;
}

template <typename T>
T parse_value(std::string_view key, std::string_view text) {
    T out{};
    const auto* end = text.data() + text.size();
    const auto res = std::from_chars(text.data(), end, out);
    if (res.ec != std::errc{} || res.ptr != end) {
        throw InvalidArgument("invalid value '" + std::string(text) + "' for '" + std::string(key) + "'");
    }
    return out;
}

bool selected(const RunConfig& cfg, CertificateKind kind) {
    return std::find(cfg.kinds.begin(), cfg.kinds.end(), kind) != cfg.kinds.end();
}

nlohmann::ordered_json config_json(const RunConfig& cfg) {
    nlohmann::ordered_json j;
    j["lambdas"] = cfg.lambdas;
    auto families = nlohmann::ordered_json::array();
    for (const auto& t : cfg.families) families.push_back(to_string(t));
    j["families"] = std::move(families);
    j["count"] = cfg.count;
    auto kinds = nlohmann::ordered_json::array();
    for (auto k : cfg.kinds) kinds.push_back(std::string(to_string(k)));
    j["kinds"] = std::move(kinds);
    j["m"] = cfg.m_values;
    return j;
}

nlohmann::ordered_json summary_json(const SuiteReport& report) {
    nlohmann::ordered_json j;
    j["total"] = report.certificates.size();
    j["failures"] = report.failures;
    j["passed"] = report.passed();
    nlohmann::ordered_json kinds;
    for (auto kind : kAllCertificateKinds) {
        const auto it = report.by_kind.find(std::string(to_string(kind)));
        if (it == report.by_kind.end()) continue;
        kinds[it->first] = {{"count", it->second.count},
                            {"failures", it->second.failures},
                            {"max_ratio", it->second.max_ratio}};
    }
    j["kinds"] = std::move(kinds);
    return j;
}

}  // namespace

ReportFormat parse_report_format(std::string_view name) {
    if (name == "json") return ReportFormat::json;
    if (name == "csv") return ReportFormat::csv;
    throw InvalidArgument("unknown report format '" + std::string(name) + "' (expected json or csv)");
}

void validate(const RunConfig& cfg) {
    if (cfg.lambdas.empty()) throw InvalidArgument("at least one lambda is required");
    for (double l : cfg.lambdas) {
        if (!(l > 0.0) || !std::isfinite(l)) throw InvalidArgument("lambda values must be positive and finite");
    }
    if (cfg.count == 0) throw InvalidArgument("count must be at least 1");
    if (cfg.families.empty()) throw InvalidArgument("at least one family is required");
    if (cfg.kinds.empty()) throw InvalidArgument("at least one certificate kind is required");
    for (int m : cfg.m_values) {
        if (m < 1 || m > 4) throw InvalidArgument("m values must lie in 1..4");
    }
}

RunConfig parse_config(std::string_view text) {
    RunConfig cfg;
    std::set<std::string> seen;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw InvalidArgument("config line " + std::to_string(line_no) + ": expected 'key = value'");
        }
        const std::string key(trim(line.substr(0, eq)));
        const std::string_view value = trim(line.substr(eq + 1));
        if (!seen.insert(key).second) {
            throw InvalidArgument("config line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
        }

        if (key == "lambdas" || key == "lambda") {
            cfg.lambdas.clear();
            for (const auto& item : split_any(value, ", \t")) cfg.lambdas.push_back(parse_value<double>(key, item));
        } else if (key == "families") {
            cfg.families.clear();
            for (const auto& item : split_any(value, "; \t")) cfg.families.push_back(parse_family_template(item));
        } else if (key == "count") {
            cfg.count = parse_value<std::size_t>(key, value);
        } else if (key == "seed") {
            cfg.seed = parse_value<std::uint64_t>(key, value);
        } else if (key == "kinds") {
            if (value != "all") {
                cfg.kinds.clear();
                for (const auto& item : split_any(value, ", \t")) cfg.kinds.push_back(parse_certificate_kind(item));
            }
        } else if (key == "m") {
            cfg.m_values.clear();
            for (const auto& item : split_any(value, ", \t")) cfg.m_values.push_back(parse_value<int>(key, item));
        } else if (key == "output") {
            cfg.output = std::string(value);
        } else if (key == "format") {
            cfg.format = parse_report_format(value);
        } else {
            throw InvalidArgument("config line " + std::to_string(line_no) + ": unknown key '" + key + "'");
        }
    }
    validate(cfg);
    return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidArgument("cannot read config file '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

std::vector<Certificate> certify(const ChebFunction& u, const RunConfig& cfg) {
    std::vector<int> jet_orders;
    if (selected(cfg, CertificateKind::trace_jet_m)) {
        for (int m : cfg.m_values) {
            if (m >= 2) jet_orders.push_back(m);
        }
        std::sort(jet_orders.begin(), jet_orders.end());
        jet_orders.erase(std::unique(jet_orders.begin(), jet_orders.end()), jet_orders.end());
    }
    const int order = jet_orders.empty() ? 1 : jet_orders.back();
    const FunctionProfile p = profile(u, order);

    std::vector<Certificate> out;
    for (auto kind : kAllCertificateKinds) {
        if (!selected(cfg, kind)) continue;
        switch (kind) {
            case CertificateKind::endpoint_a_sq: out.push_back(check_endpoint_sq(p, Endpoint::a)); break;
            case CertificateKind::endpoint_b_sq: out.push_back(check_endpoint_sq(p, Endpoint::b)); break;
            case CertificateKind::trace0: out.push_back(check_trace0(p)); break;
            case CertificateKind::trace_jet_m:
                for (int m : jet_orders) out.push_back(check_trace_jet(p, m));
                break;
            case CertificateKind::poincare_smooth_sq:
                for (auto e : {Endpoint::a, Endpoint::b}) out.push_back(check_poincare_smooth_sq(p, e));
                break;
            case CertificateKind::poincare:
                for (auto e : {Endpoint::a, Endpoint::b}) out.push_back(check_poincare(p, e));
                break;
            case CertificateKind::friedrichs:
                for (auto e : {Endpoint::a, Endpoint::b}) out.push_back(check_friedrichs(p, e));
                break;
            case CertificateKind::equiv_upper:
                for (auto e : {Endpoint::a, Endpoint::b}) out.push_back(check_equiv(p, e).second);
                break;
            case CertificateKind::equiv_lower:
                for (auto e : {Endpoint::a, Endpoint::b}) out.push_back(check_equiv(p, e).first);
                break;
        }
    }
    return out;
}

SuiteReport run_suite(const RunConfig& cfg) {
    validate(cfg);
    SuiteReport report{cfg, {}, {}, 0};
    std::vector<double> lambdas = cfg.lambdas;
    std::sort(lambdas.begin(), lambdas.end());

    for (double lambda : lambdas) {
        const Interval iv(0.0, lambda);
        for (std::size_t f = 0; f < cfg.families.size(); ++f) {
            for (std::size_t i = 0; i < cfg.count; ++i) {
                const auto fd = instantiate(cfg.families[f], iv, derive_seed(cfg.seed, f, i));
                const std::string descriptor = to_string(fd);
                for (auto& c : certify(generate(fd), cfg)) {
                    c.metadata.function = descriptor;
                    c.metadata.seed = fd.seed;
                    auto& s = report.by_kind[std::string(c.name())];
                    ++s.count;
                    s.max_ratio = std::max(s.max_ratio, c.ratio);
                    if (!c.pass) {
                        ++s.failures;
                        ++report.failures;
                    }
                    report.certificates.push_back(std::move(c));
                }
            }
        }
    }
    return report;
}

nlohmann::ordered_json to_json(const SuiteReport& report) {
    nlohmann::ordered_json j;
    j["generator"] = std::string(kGeneratorName);
    j["seed"] = report.config.seed;
    j["config"] = config_json(report.config);
    j["summary"] = summary_json(report);
    auto certs = nlohmann::ordered_json::array();
    for (const auto& c : report.certificates) certs.push_back(to_json(c));
    j["certificates"] = std::move(certs);
    return j;
}

void write_report(const SuiteReport& report, std::ostream& out, ReportFormat format) {
    if (format == ReportFormat::csv) {
        out << csv_header() << '\n';
        for (const auto& c : report.certificates) out << to_csv_row(c) << '\n';
        return;
    }
    // Streamed so that large runs never hold the whole document; one
    // certificate object per line.
    out << "{\"generator\":" << nlohmann::ordered_json(std::string(kGeneratorName)).dump()
        << ",\"seed\":" << report.config.seed << ",\n\"config\":" << config_json(report.config).dump()
        << ",\n\"summary\":" << summary_json(report).dump() << ",\n\"certificates\":[";
    for (std::size_t i = 0; i < report.certificates.size(); ++i) {
        out << (i == 0 ? "\n" : ",\n") << to_json(report.certificates[i]).dump();
    }
    out << "\n]}\n";
}

bool SharpRunEntry::passed() const noexcept {
    return error.empty() && estimate && domination.dominated &&
           estimate->error_indicator < kExtrapolationTolerance;
}

bool SharpRunReport::passed() const noexcept {
    return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.passed(); });
}

SharpRunReport run_sharp(std::span<const double> lambdas, std::span<const std::string> kinds) {
    SharpRunReport report;
    for (double lambda : lambdas) {
        if (!(lambda > 0.0) || !std::isfinite(lambda)) throw InvalidArgument("lambda values must be positive and finite");
        const Interval iv(0.0, lambda);
        std::vector<QuotientSpec> specs;
        if (kinds.empty()) {
            specs = all_quotients(iv);
        } else {
            for (const auto& k : kinds) specs.push_back(parse_quotient(k, iv));
        }
        const auto pc = paper_constants(iv);
        for (const auto& spec : specs) {
            SharpRunEntry entry;
            entry.lambda = lambda;
            entry.kind = spec.name();
            try {
                entry.estimate = estimate_sharp(spec);
                entry.domination = compare_with_paper(*entry.estimate, pc);
            } catch (const ConvergenceError& e) {
                entry.error = e.what();
                entry.domination.paper_constant = paper_bound(spec.kind, pc);
            }
            report.entries.push_back(std::move(entry));
        }
    }
    return report;
}

nlohmann::ordered_json to_json(const SharpRunReport& report) {
    nlohmann::ordered_json j;
    j["passed"] = report.passed();
    auto entries = nlohmann::ordered_json::array();
    for (const auto& e : report.entries) {
        nlohmann::ordered_json item;
        if (e.estimate) {
            item = to_json(*e.estimate, e.domination);
        } else {
            item["kind"] = e.kind;
            item["lambda"] = e.lambda;
            item["paper_constant"] = e.domination.paper_constant;
            item["error"] = e.error;
        }
        item["passed"] = e.passed();
        entries.push_back(std::move(item));
    }
    j["estimates"] = std::move(entries);
    return j;
}

void write_constant_curves(const SharpRunReport& report, std::ostream& out) {
    out << "lambda,kind,paper_constant,sharp_estimate\n";
    for (const auto& e : report.entries) {
        out << format_double(e.lambda) << ',' << e.kind << ',' << format_double(e.domination.paper_constant) << ','
            << (e.estimate ? format_double(e.estimate->value) : std::string("nan")) << '\n';
    }
}

void write_constants_table(std::span<const double> lambdas, std::ostream& out) {
    out << std::left << std::setw(14) << "lambda" << std::setw(14) << "c_trace0" << std::setw(14) << "c_poincare"
        << std::setw(14) << "c_friedrichs" << std::setw(15) << "c_equiv_lower" << "c_equiv_upper" << '\n';
    const auto flags = out.flags();
    const auto precision = out.precision();
    out << std::setprecision(10);
    for (double lambda : lambdas) {
        const auto pc = paper_constants(Interval(0.0, lambda));
        out << std::setw(14) << lambda << std::setw(14) << pc.c_trace0 << std::setw(14) << pc.c_poincare
            << std::setw(14) << pc.c_friedrichs << std::setw(15) << pc.c_equiv_lower << pc.c_equiv_upper << '\n';
    }
    out.flags(flags);
    out.precision(precision);
}

}  // namespace sob1d
