#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qdirac/kernels.hpp"
#include "qdirac/report.hpp"

namespace qdirac {

/// Parsed scenario configuration. Every field has a scenario-specific
/// default; a config file overrides selectively. Validation rejects unknown
/// keys, wrong types and out-of-range values with ConfigInvalid.
struct ScenarioConfig {
    std::string scenario;
    std::uint64_t seed = 987654321;
    std::string output = "reports";

    // geometry
    bool use_mesh_file = false;
    std::string mesh_path;
    double radius = 1.0;
    Vec3 center{};
    int level = 4;

    // wave parameters (exactly one of nu / (omega, m) is active)
    std::optional<Cplx> nu;
    std::optional<std::pair<double, double>> omega_m;

    std::vector<PointSource> sources;
    std::vector<Vec3> targets;
    std::vector<double> radii;
    std::vector<int> levels; // convergence sweep

    double tolerance = 1e-3;
    double spacing = 0.05;
    int samples = 10000;

    bool strict = false; // from the command line, not the file
};

// The built-in configuration for a subcommand; throws ConfigInvalid for an
// unknown scenario name.
ScenarioConfig default_scenario_config(const std::string& scenario);

// Parse + validate a JSON config document against the schema (version 1).
// `scenario` must match the subcommand when both are given.
ScenarioConfig parse_scenario_config(const std::string& json_text, const std::string& scenario);

// Run the scenario and collect one report row per check.
Report run_scenario(const ScenarioConfig& config);

// Convergence table entry (also written to convergence.csv by the CLI).
struct ConvergenceRow {
    int level = 0;
    double edge = 0.0;
    double error = 0.0;
};

std::vector<ConvergenceRow> convergence_table(const ScenarioConfig& config);

} // namespace qdirac
