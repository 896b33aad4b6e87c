#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "gausslab/experiments.hpp"
#include "gausslab/fock.hpp"

namespace ex = gausslab::experiments;

namespace {

int run_command(const std::string& config_arg, const std::vector<std::string>& overrides,
                const std::string& output_override, bool serial) {
    ex::ExperimentConfig cfg;
    try {
        std::ifstream probe(config_arg);
        cfg = probe.good() ? ex::parse_config_file(config_arg)
                           : ex::config_for_experiment(config_arg);
        for (const auto& o : overrides) ex::apply_override(cfg, o);
    } catch (const ex::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    }

    ex::RunOutcome outcome;
    try {
        outcome = ex::run(cfg, serial ? gausslab::ExecPolicy::serial
                                      : gausslab::ExecPolicy::parallel);
    } catch (const ex::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const gausslab::fock::CutoffError& e) {
        std::cerr << "numerical-domain error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "numerical-domain error: " << e.what() << "\n";
        return 3;
    }

    std::string path = output_override;
    if (path.empty()) {
        const auto it = cfg.params.find("output");
        path = (it != cfg.params.end()) ? it->second : outcome.default_output_name;
    }
    std::ofstream out(path);
    if (!out) {
        std::cerr << "cannot write output file: " << path << "\n";
        return 2;
    }
    out << outcome.csv;
    std::cout << outcome.summary;
    std::cout << "wrote " << path << "\n";
    if (!outcome.assertions_passed) {
        std::cerr << "figure check failed\n";
        return 4;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"gauss-lab: teleportation-based Gaussian channel simulation experiments"};
    app.require_subcommand(1);

    std::string config_arg;
    std::vector<std::string> overrides;
    std::string output_override;
    bool serial = false;
    auto* run = app.add_subcommand("run", "run an experiment from a config file or by name");
    run->add_option("config", config_arg, "config file path, or a bare experiment name")
        ->required();
    run->add_option("--set", overrides, "override config entries (key=value)");
    run->add_option("--output", output_override, "CSV destination (default from config)");
    run->add_flag("--serial", serial, "use the serial reference kernels");

    std::string experiment;
    auto* describe = app.add_subcommand("describe", "print an experiment's parameter schema");
    describe->add_option("experiment", experiment, "experiment name")->required();

    auto* list = app.add_subcommand("list", "list available experiments");

    CLI11_PARSE(app, argc, argv);

    if (run->parsed()) return run_command(config_arg, overrides, output_override, serial);
    if (describe->parsed()) {
        try {
            std::cout << ex::describe(experiment);
        } catch (const ex::ConfigError& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 2;
        }
        return 0;
    }
    if (list->parsed()) {
        for (const auto& name : ex::experiment_names()) std::cout << name << "\n";
        return 0;
    }
    return 0;
}
