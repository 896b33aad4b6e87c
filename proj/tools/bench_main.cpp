// Compares the serial reference kernels against the OpenMP ones on the
// grid-heavy experiments and checks that both produce identical bytes.
#include <chrono>
#include <cstdio>
#include <string>

#include <omp.h>

#include "gausslab/experiments.hpp"

namespace ex = gausslab::experiments;

namespace {

double run_ms(const ex::ExperimentConfig& cfg, gausslab::ExecPolicy policy, std::string& csv) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto outcome = ex::run(cfg, policy);
    const auto t1 = std::chrono::steady_clock::now();
    csv = outcome.csv;
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void bench(const std::string& name, const std::vector<std::string>& overrides) {
    auto cfg = ex::config_for_experiment(name);
    for (const auto& o : overrides) ex::apply_override(cfg, o);

    std::string serial_csv, parallel_csv;
    run_ms(cfg, gausslab::ExecPolicy::serial, serial_csv);  // warm-up
    const double ts = run_ms(cfg, gausslab::ExecPolicy::serial, serial_csv);
    const double tp = run_ms(cfg, gausslab::ExecPolicy::parallel, parallel_csv);
    const bool same = serial_csv == parallel_csv;
    std::printf("%-14s serial %9.1f ms   openmp %9.1f ms   speedup %5.2fx   outputs %s\n",
                name.c_str(), ts, tp, ts / tp, same ? "identical" : "DIFFER");
}

}  // namespace

int main() {
    std::printf("threads: %d\n", omp_get_max_threads());
    bench("figA1-scan", {"tau1-steps=400", "tau2-steps=400"});
    bench("figA2-region", {"tau-steps=220", "v-steps=220"});
    bench("fig4-curve", {"g-step=0.002"});
    bench("fig5-compare", {"g-step=0.02", "cutoff=28"});
    return 0;
}
