#pragma once

#include <string>
#include <vector>

#include "swbesov/harness/artifacts.hpp"
#include "swbesov/harness/config.hpp"

namespace swbesov::harness {

// Builds every object the scenario needs and checks all parameter inequalities without
// running anything. Throws Error(config_invariant) naming the violated inequality.
void validate_config(const Config& cfg);

// validate_config, then the scenario itself. Solver errors propagate.
ScenarioResult run_scenario(const Config& cfg);

struct ConvergenceTable {
    std::vector<int> resolutions;
    std::vector<std::string> metrics;
    std::vector<std::vector<double>> values;       // [resolution][metric]
    std::vector<std::vector<double>> differences;  // |v[k+1] - v[k]| per metric
    std::vector<std::vector<double>> ratios;       // differences[k+1] / differences[k]
    Table as_table() const;
};

// Runs the scenario once per grid resolution (grid.points overridden).
ConvergenceTable compare_resolutions(const Config& cfg, const std::vector<int>& resolutions);

}  // namespace swbesov::harness
