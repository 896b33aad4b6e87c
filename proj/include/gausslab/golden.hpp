#pragma once

#include <cmath>
#include <cstddef>
#include <utility>

namespace gausslab {

struct ScalarMaximum {
    double x;
    double value;
};

/// Golden-section maximization of a unimodal f on [lo, hi] to |b-a| <= xtol.
/// Deterministic: fixed evaluation pattern, no randomness.
template <class F>
ScalarMaximum golden_section_maximize(F&& f, double lo, double hi, double xtol = 1e-10) {
    constexpr double inv_phi = 0.6180339887498949;  // (sqrt(5)-1)/2
    double a = lo, b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > xtol) {
        if (fc >= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    const double x = 0.5 * (a + b);
    return ScalarMaximum{x, f(x)};
}

/// Coarse grid scan (guards against secondary maxima) followed by
/// golden-section refinement around the best bracket.
template <class F>
ScalarMaximum grid_then_golden_maximize(F&& f, double lo, double hi,
                                        std::size_t grid_points = 128,
                                        double xtol = 1e-10) {
    if (grid_points < 3) grid_points = 3;
    double best_x = lo, best_v = f(lo);
    std::size_t best_i = 0;
    for (std::size_t i = 1; i < grid_points; ++i) {
        const double x = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(grid_points - 1);
        const double v = f(x);
        if (v > best_v) {
            best_v = v;
            best_x = x;
            best_i = i;
        }
    }
    const double step = (hi - lo) / static_cast<double>(grid_points - 1);
    const double blo = (best_i == 0) ? lo : best_x - step;
    const double bhi = (best_i == grid_points - 1) ? hi : best_x + step;
    const auto refined = golden_section_maximize(f, blo, bhi, xtol);
    return refined.value >= best_v ? refined : ScalarMaximum{best_x, best_v};
}

}  // namespace gausslab
