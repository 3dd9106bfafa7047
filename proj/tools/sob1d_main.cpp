// sob1d: certificate sweeps, sharp-constant estimates and constant tables
// for the one-dimensional trace, Poincare and Friedrichs inequalities.
//
// Exit status: 0 success, 1 certificate or domination failure, 2 usage or
// configuration error.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sob1d/error.hpp"
#include "sob1d/suite.hpp"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

std::vector<double> split_lambdas(const std::vector<std::string>& raw) {
    std::string joined;
    for (const auto& r : raw) joined += r + " ";
    return sob1d::parse_config("lambdas = " + joined).lambdas;
}

/// Writes through `writer` to the file at `path`, or to stdout when empty.
template <typename Writer>
void emit(const std::string& path, Writer&& writer) {
    if (path.empty() || path == "-") {
        writer(std::cout);
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
    writer(out);
    out.flush();
    if (!out) throw std::runtime_error("failed writing output file '" + path + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical certificates and sharp constants for 1-D Sobolev trace and Poincare inequalities"};
    app.require_subcommand(1);

    // verify
    auto* verify = app.add_subcommand("verify", "Run certificate suites over seeded function families");
    std::string config_path;
    std::vector<std::string> v_lambdas;
    std::vector<std::string> v_families;
    std::vector<std::string> v_kinds;
    std::vector<int> v_m;
    std::size_t v_count = 0;
    std::uint64_t v_seed = 0;
    std::string v_out;
    std::string v_format;
    auto* opt_config = verify->add_option("--config", config_path, "Key-value config file")->check(CLI::ExistingFile);
    auto* opt_lambda = verify->add_option("--lambda", v_lambdas, "Interval lengths (repeatable or comma separated)");
    auto* opt_families = verify->add_option("--families", v_families, "Family templates, e.g. polynomial:max_degree=20");
    auto* opt_count = verify->add_option("--count", v_count, "Functions per family");
    auto* opt_seed = verify->add_option("--seed", v_seed, "Run seed");
    auto* opt_kinds = verify->add_option("--kinds", v_kinds, "Certificate kinds (default all)");
    auto* opt_m = verify->add_option("--m", v_m, "Sobolev orders for trace_jet_m");
    auto* opt_out = verify->add_option("--out", v_out, "Report path (default stdout)");
    auto* opt_format = verify->add_option("--format", v_format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    for (auto* o : {opt_lambda, opt_families, opt_count, opt_seed, opt_kinds, opt_m}) opt_config->excludes(o);

    // sharp
    auto* sharp = app.add_subcommand("sharp", "Estimate sharp constants and compare with the explicit ones");
    std::vector<std::string> s_lambdas{"0.25", "1", "4"};
    std::vector<std::string> s_kinds;
    std::string s_out;
    std::string s_curves;
    sharp->add_option("--lambda", s_lambdas, "Interval lengths")->capture_default_str();
    sharp->add_option("--kinds", s_kinds, "Quotients, e.g. trace_both poincare_dirichlet_a (default all)");
    sharp->add_option("--out", s_out, "JSON report path (default stdout)");
    sharp->add_option("--curves", s_curves, "Also write lambda,kind,paper_constant,sharp_estimate CSV here");

    // constants
    auto* constants = app.add_subcommand("constants", "Print the explicit constants for a list of lambdas");
    std::vector<std::string> c_lambdas{"0.1", "0.5", "1", "2", "10"};
    constants->add_option("--lambda", c_lambdas, "Interval lengths")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (verify->parsed()) {
            sob1d::RunConfig cfg = config_path.empty() ? sob1d::RunConfig{} : sob1d::load_config(config_path);
            if (*opt_lambda) cfg.lambdas = split_lambdas(v_lambdas);
            if (*opt_families) {
                cfg.families.clear();
                for (const auto& f : v_families) cfg.families.push_back(sob1d::parse_family_template(f));
            }
            if (*opt_count) cfg.count = v_count;
            if (*opt_seed) cfg.seed = v_seed;
            if (*opt_kinds) {
                cfg.kinds.clear();
                for (const auto& k : v_kinds) cfg.kinds.push_back(sob1d::parse_certificate_kind(k));
            }
            if (*opt_m) cfg.m_values = v_m;
            if (*opt_out) cfg.output = v_out;
            if (*opt_format) cfg.format = sob1d::parse_report_format(v_format);
            sob1d::validate(cfg);

            const auto report = sob1d::run_suite(cfg);
            emit(cfg.output, [&](std::ostream& os) { sob1d::write_report(report, os, cfg.format); });

            std::cerr << "verify: " << report.certificates.size() << " certificates, " << report.failures
                      << " failures\n";
            for (const auto& [kind, s] : report.by_kind) {
                std::cerr << "  " << kind << ": " << s.count << " checked, " << s.failures
                          << " failed, max ratio " << sob1d::format_double(s.max_ratio) << '\n';
            }
            return report.passed() ? 0 : kExitFailure;
        }

        if (sharp->parsed()) {
            const auto lambdas = split_lambdas(s_lambdas);
            const auto report = sob1d::run_sharp(lambdas, s_kinds);
            emit(s_out, [&](std::ostream& os) { os << sob1d::to_json(report).dump(2) << '\n'; });
            if (!s_curves.empty()) emit(s_curves, [&](std::ostream& os) { sob1d::write_constant_curves(report, os); });
            for (const auto& e : report.entries) {
                if (!e.passed()) std::cerr << "sharp: " << e.kind << " at lambda " << e.lambda << " failed\n";
            }
            return report.passed() ? 0 : kExitFailure;
        }

        if (constants->parsed()) {
            sob1d::write_constants_table(split_lambdas(c_lambdas), std::cout);
            return 0;
        }
    } catch (const sob1d::InvalidArgument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitUsage;
}
