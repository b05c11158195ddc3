// Command-line harness: runs verification scenarios and writes CSV/JSON
// reports. Exit codes: 0 all checks pass, 1 a check failed, 2 bad
// configuration or usage.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qdirac/errors.hpp"
#include "qdirac/scenario.hpp"

namespace fs = std::filesystem;
using namespace qdirac;

namespace {

struct CliOptions {
    std::string config_path;
    std::string out_dir;
    int level = -1;
    std::int64_t seed = -1;
    bool strict = false;
};

const char* kScenarioHelp[][2] = {
    {"verify-algebra", "quaternion, gamma-matrix and projector identities"},
    {"cauchy-interior", "interior reconstruction from boundary traces"},
    {"cauchy-exterior", "exterior reconstruction and far-sphere truncation"},
    {"radiation-scan", "outgoing vs incoming kernels and the weak-condition counterexample"},
    {"spinor-exterior", "exterior reconstruction of Dirac spinor fields"},
    {"stokes-check", "volume-vs-surface integration identity"},
    {"l2-scan", "surface L2 growth of radiating, absorbing and diverging fields"},
    {"convergence", "mesh-refinement error table for the interior reconstruction"},
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigInvalid("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int run(const std::string& scenario, const CliOptions& opt) {
    ScenarioConfig cfg = opt.config_path.empty()
                             ? default_scenario_config(scenario)
                             : parse_scenario_config(read_file(opt.config_path), scenario);
    if (opt.level >= 0) cfg.level = opt.level;
    if (opt.seed >= 0) cfg.seed = static_cast<std::uint64_t>(opt.seed);
    if (!opt.out_dir.empty()) cfg.output = opt.out_dir;
    cfg.strict = opt.strict;

    const Report rep = run_scenario(cfg);

    fs::create_directories(cfg.output);
    const std::string stamp = utc_timestamp();
    {
        std::ofstream csv(fs::path(cfg.output) / (scenario + ".csv"));
        rep.write_csv(csv, stamp);
    }
    {
        std::ofstream js(fs::path(cfg.output) / (scenario + ".json"));
        rep.write_json(js, stamp);
    }
    if (scenario == "convergence") {
        std::ofstream table(fs::path(cfg.output) / "convergence.csv");
        table << "level,h,error\n";
        for (const ConvergenceRow& row : convergence_table(cfg)) {
            table << row.level << ',' << format_value(row.edge) << ',' << format_value(row.error)
                  << "\n";
        }
    }

    for (const CheckRow& r : rep.rows) {
        const char* status = r.gate ? (r.passed ? "pass" : "FAIL") : "info";
        std::cout << "[" << status << "] " << scenario << "/" << r.check << "  value=" <<
            format_value(r.value) << "  threshold=" << format_value(r.threshold) << "  ("
                  << r.anchor << ")\n";
    }
    const bool ok = rep.all_passed(cfg.strict);
    std::cout << (ok ? "OK" : "FAILED") << ": " << scenario << " (" << rep.rows.size()
              << " checks, seed " << rep.seed << ", reports in " << cfg.output << ")\n";
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Verification harness for quaternionic Dirac boundary operators"};
    app.require_subcommand(1);

    CliOptions opt;
    for (const auto& [name, help] : kScenarioHelp) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("--config", opt.config_path, "JSON scenario config (schema version 1)");
        sub->add_option("--level", opt.level, "override the mesh subdivision level");
        sub->add_option("--out", opt.out_dir, "report output directory");
        sub->add_option("--seed", opt.seed, "override the random seed");
        sub->add_flag("--strict", opt.strict, "informational misses count as failures");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const std::string scenario = app.get_subcommands().front()->get_name();
    try {
        return run(scenario, opt);
    } catch (const ConfigInvalid& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
