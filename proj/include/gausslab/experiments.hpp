#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "gausslab/par.hpp"

namespace gausslab::experiments {

/// Configuration rejected before any computation starts.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ExperimentConfig {
    std::string experiment;
    std::map<std::string, std::string> params;
};

/// Flat key=value file with '#' comments; must set `experiment`.
ExperimentConfig parse_config_file(const std::string& path);

/// Defaults-only config for a known experiment name.
ExperimentConfig config_for_experiment(const std::string& name);

/// Applies a single `key=value` override.
void apply_override(ExperimentConfig& cfg, const std::string& key_eq_value);

struct RunOutcome {
    bool assertions_passed = true;
    std::string summary;  ///< one line per figure check, plus headline numbers
    std::string csv;      ///< provenance comment + header + data rows
    std::string default_output_name;
};

/// Executes the experiment.  Throws ConfigError for malformed configs and
/// std::domain_error / CutoffError for numerical-domain failures.
RunOutcome run(const ExperimentConfig& cfg, ExecPolicy policy = ExecPolicy::parallel);

std::vector<std::string> experiment_names();

/// Parameter schema, defaults, and the figure the experiment reproduces.
std::string describe(const std::string& experiment);

}  // namespace gausslab::experiments
