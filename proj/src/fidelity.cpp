#include "gausslab/fidelity.hpp"

#include <algorithm>

namespace gausslab {

SingleModeGaussian squeezed_vacuum(const SqueezingParam& zeta) {
    const double r = zeta.r();
    return SingleModeGaussian{std::exp(2.0 * r), std::exp(-2.0 * r)};
}

SingleModeGaussian apply_channel_1mode(const SingleModeGaussian& s, const Channel& g) {
    if (!g.is_physical())
        throw std::domain_error("apply_channel_1mode: unphysical channel");
    return SingleModeGaussian{g.tau * s.vx + g.noise, g.tau * s.vp + g.noise};
}

double gaussian_fidelity_1mode(const SingleModeGaussian& s1, const SingleModeGaussian& s2) {
    const double delta_big = (s1.vx + s2.vx) * (s1.vp + s2.vp);
    const double d1 = s1.vx * s1.vp - 1.0;
    const double d2 = s2.vx * s2.vp - 1.0;
    const double delta_small = std::max(d1, 0.0) * std::max(d2, 0.0);
    return 2.0 / (std::sqrt(delta_big + delta_small) - std::sqrt(delta_small));
}

double fidelity_pure_two_mode(const TwoModeCovariance& pure_in, const TwoModeCovariance& out) {
    const auto spec = symplectic_eigenvalues(pure_in);
    if (std::abs(spec.nu_minus * spec.nu_plus - 1.0) > 1e-6)
        throw std::domain_error("fidelity_pure_two_mode: first argument must be pure");
    const TwoModeCovariance s{pure_in.a + out.a, pure_in.b + out.b,
                              pure_in.c1 + out.c1, pure_in.c2 + out.c2};
    const double det = (s.a * s.b - s.c1 * s.c1) * (s.a * s.b - s.c2 * s.c2);
    return 4.0 / std::sqrt(det);
}

FidelityScanResult appendix_a_scan(const SqueezingParam& zeta, double eps1, double eps2,
                                   int n1, int n2, double tau1_lo, double tau1_hi,
                                   double tau2_lo, double tau2_hi, ExecPolicy policy) {
    if (eps1 < 1.0 || eps2 < 1.0)
        throw std::invalid_argument("appendix_a_scan: excess noises must be >= 1");
    if (n1 < 2 || n2 < 2)
        throw std::invalid_argument("appendix_a_scan: need at least a 2x2 grid");

    const TwoModeCovariance input = tmsv(zeta);
    const SingleModeGaussian input_1m = squeezed_vacuum(zeta);

    FidelityScanResult res;
    res.n1 = n1;
    res.n2 = n2;
    res.cells.resize(static_cast<std::size_t>(n1) * n2);

    parallel_for(static_cast<std::int64_t>(n1) * n2, policy, [&](std::int64_t idx) {
        const int i = static_cast<int>(idx) / n2;
        const int j = static_cast<int>(idx) % n2;
        const double t1 = tau1_lo + (tau1_hi - tau1_lo) * i / (n1 - 1.0);
        const double t2 = tau2_lo + (tau2_hi - tau2_lo) * j / (n2 - 1.0);
        const Channel loss = Channel::from_excess(t1, eps1);
        const Channel amp = Channel::from_excess(t2, eps2);
        const Channel composite = compose(amp, loss);  // amplifier applied first

        FidelityScanCell cell;
        cell.tau1 = t1;
        cell.tau2 = t2;
        cell.f1 = fidelity_pure_two_mode(input, apply_to_mode2(input, loss));
        cell.f2 = fidelity_pure_two_mode(input, apply_to_mode2(input, composite));
        cell.f1_single = gaussian_fidelity_1mode(input_1m, apply_channel_1mode(input_1m, loss));
        cell.f2_single = gaussian_fidelity_1mode(input_1m, apply_channel_1mode(input_1m, composite));
        cell.composite_eb = is_entanglement_breaking(composite);
        const bool lt = cell.f1 < cell.f2;
        cell.region = (lt && cell.composite_eb) ? 1 : (cell.composite_eb ? 2 : (lt ? 4 : 3));
        res.cells[static_cast<std::size_t>(idx)] = cell;
    });

    std::fill(std::begin(res.region_count), std::end(res.region_count), 0);
    for (const auto& c : res.cells) ++res.region_count[c.region - 1];
    return res;
}

}  // namespace gausslab
