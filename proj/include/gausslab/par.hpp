#pragma once

#include <cstdint>

namespace gausslab {

/// Execution policy for the grid kernels.  `serial` is the reference path;
/// `parallel` distributes iterations over OpenMP threads.  Kernels write each
/// cell independently, so both paths produce bit-identical results.
enum class ExecPolicy { serial, parallel };

template <class F>
void parallel_for(std::int64_t n, ExecPolicy policy, F&& body) {
    if (policy == ExecPolicy::parallel) {
#pragma omp parallel for schedule(static)
        for (std::int64_t i = 0; i < n; ++i) body(i);
    } else {
        for (std::int64_t i = 0; i < n; ++i) body(i);
    }
}

}  // namespace gausslab
