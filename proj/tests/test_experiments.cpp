#include <doctest.h>

#include <fstream>

#include "gausslab/experiments.hpp"

namespace ex = gausslab::experiments;

TEST_CASE("config parsing") {
    const char* path = "test_config.cfg";
    {
        std::ofstream f(path);
        f << "# sample\n"
          << "experiment = resource-family\n"
          << "tau=0.5   # inline comment\n"
          << "eps = 1.2\n";
    }
    const auto cfg = ex::parse_config_file(path);
    CHECK(cfg.experiment == "resource-family");
    CHECK(cfg.params.at("tau") == "0.5");
    CHECK(cfg.params.at("eps") == "1.2");

    SUBCASE("overrides") {
        auto c = cfg;
        ex::apply_override(c, "eps=1.4");
        CHECK(c.params.at("eps") == "1.4");
        CHECK_THROWS_AS(ex::apply_override(c, "nonsense"), ex::ConfigError);
    }
    SUBCASE("missing experiment key") {
        {
            std::ofstream f(path);
            f << "tau=0.5\n";
        }
        CHECK_THROWS_AS(ex::parse_config_file(path), ex::ConfigError);
    }
}

TEST_CASE("describe") {
    for (const auto& name : ex::experiment_names()) {
        const auto text = ex::describe(name);
        CHECK(text.find(name) != std::string::npos);
        CHECK(text.find("parameters") != std::string::npos);
    }
    CHECK_THROWS_AS(ex::describe("fig9"), ex::ConfigError);
    CHECK(ex::experiment_names().size() == 8);
}

TEST_CASE("unknown parameters are rejected") {
    auto cfg = ex::config_for_experiment("fig1-region");
    ex::apply_override(cfg, "typo-key=3");
    CHECK_THROWS_AS(ex::run(cfg), ex::ConfigError);
}

TEST_CASE("runs are deterministic and policy-independent") {
    auto cfg = ex::config_for_experiment("figA1-scan");
    ex::apply_override(cfg, "tau1-steps=30");
    ex::apply_override(cfg, "tau2-steps=30");
    const auto serial = ex::run(cfg, gausslab::ExecPolicy::serial);
    const auto parallel = ex::run(cfg, gausslab::ExecPolicy::parallel);
    const auto repeat = ex::run(cfg, gausslab::ExecPolicy::parallel);
    CHECK(serial.csv == parallel.csv);
    CHECK(parallel.csv == repeat.csv);
    CHECK(serial.csv.find("# experiment=figA1-scan") == 0);
    CHECK(serial.csv.find("tau1,tau2,") != std::string::npos);
}

TEST_CASE("small smoke runs of every experiment") {
    const std::vector<std::vector<std::string>> setups = {
        {"fig1-region", "tau-steps=9", "v-steps=9"},
        {"fig4-curve", "g-step=0.1", "eof-tol=1e-5"},
        {"fig4-contours", "tau-steps=7", "v-steps=7"},
        {"fig5-compare", "g-step=0.5", "cutoff=16", "g-max=3.5"},
        {"figA1-scan", "tau1-steps=25", "tau2-steps=25"},
        {"figA2-region", "tau-steps=21", "v-steps=21"},
        {"resource-family", "eps=1.2"},
        {"channel-sim", "chi=0.5", "lambda-steps=11"},
    };
    for (const auto& setup : setups) {
        CAPTURE(setup[0]);
        auto cfg = ex::config_for_experiment(setup[0]);
        for (std::size_t i = 1; i < setup.size(); ++i) ex::apply_override(cfg, setup[i]);
        const auto out = ex::run(cfg);
        CHECK(out.assertions_passed);
        CHECK(!out.csv.empty());
        CHECK(out.csv.front() == '#');
    }
}

TEST_CASE("figure checks carry their tolerances") {
    auto cfg = ex::config_for_experiment("fig4-curve");
    ex::apply_override(cfg, "g-step=0.05");
    const auto out = ex::run(cfg);
    CHECK(out.assertions_passed);
    CHECK(out.summary.find("resource-eof-crossing-at-1/chi: PASS") != std::string::npos);
    CHECK(out.summary.find("equal-decoherence-at-1/chi: PASS") != std::string::npos);
    CHECK(out.summary.find("error-correction-beyond-1/chi: PASS") != std::string::npos);
}
