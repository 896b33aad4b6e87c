#include "gausslab/entanglement.hpp"

#include <algorithm>

namespace gausslab {

double eof_from_ro(double ro) {
    if (!(ro >= 0.0))
        throw std::domain_error("eof_from_ro: r_o must be >= 0");
    if (ro == 0.0) return 0.0;
    const double ch = std::cosh(ro) * std::cosh(ro);
    const double sh = std::sinh(ro) * std::sinh(ro);
    // sh log2 sh -> 0 as ro -> 0, so the branch above is the correct limit.
    return ch * std::log2(ch) - sh * std::log2(sh);
}

double ro_tmsv_through_channel(double r, const Channel& g) {
    if (!(r >= 0.0))
        throw std::domain_error("ro_tmsv_through_channel: r must be >= 0");
    if (!g.is_physical())
        throw std::domain_error("ro_tmsv_through_channel: unphysical channel");
    if (is_entanglement_breaking(g)) return 0.0;

    const double tau = g.tau, v = g.noise;
    const double gap2 = (1.0 - tau) * (1.0 - tau);
    double rad = v * v - gap2;
    if (rad < 0.0) {
        if (rad < -1e-12 * std::max(1.0, v * v))
            throw std::domain_error("ro_tmsv_through_channel: noise below |1-tau| (complex intermediate)");
        rad = 0.0;
    }
    const double s2 = std::sinh(2.0 * r), c2 = std::cosh(2.0 * r), c4 = std::cosh(4.0 * r);
    const double den = v - 2.0 * std::sqrt(tau) * s2 + (1.0 + tau) * c2;
    const double num = 3.0 + (2.0 * v * v - gap2) * c4 + tau * (3.0 * tau + 2.0)
                       + 4.0 * v * (1.0 + tau) * c2
                       - 4.0 * std::sqrt(rad) * s2 * (v * c2 + 1.0 + tau);
    if (!(num > 0.0) || !(den > 0.0)) return 0.0;
    const double ro = 0.25 * std::log(num / (2.0 * den * den));
    return std::max(ro, 0.0);
}

double ro_choi(const Channel& g) {
    if (!g.is_physical())
        throw std::domain_error("ro_choi: unphysical channel");
    if (classify(g) == ChannelClass::Identity)
        throw std::domain_error("ro_choi: identity channel has a divergent Choi-state");
    if (is_entanglement_breaking(g)) return 0.0;
    const double tau = g.tau, v = g.noise;
    if (std::abs(tau - 1.0) < 1e-12)
        return std::max(0.25 * std::log(4.0 / (v * v)), 0.0);
    const double rad = std::max(v * v - (1.0 - tau) * (1.0 - tau), 0.0);
    const double root = 1.0 - std::sqrt(tau);
    const double arg = (2.0 * v * (v - std::sqrt(rad)) - (1.0 - tau) * (1.0 - tau))
                       / (root * root * root * root);
    if (!(arg > 0.0)) return 0.0;
    return std::max(0.25 * std::log(arg), 0.0);
}

TmsvChannelDecomposition decompose_tmsv_channel(const TwoModeCovariance& sigma) {
    if (!sigma.is_balanced(1e-9))
        throw std::domain_error("decompose_tmsv_channel: state is not balanced (c2 != -c1)");
    if (!(sigma.a > 1.0))
        throw std::domain_error("decompose_tmsv_channel: a <= 1, first mode carries no squeezing");
    if (!(sigma.c1 > 0.0))
        throw std::domain_error("decompose_tmsv_channel: c1 <= 0, not in the decomposable family");
    const double r = std::acosh(sigma.a) / 2.0;
    const double tau = sigma.c1 * sigma.c1 / (sigma.a * sigma.a - 1.0);
    const double v = sigma.b - tau * sigma.a;
    const Channel g{tau, v};
    if (!g.is_physical())
        throw std::domain_error("decompose_tmsv_channel: recovered channel is unphysical (state outside the family)");
    return TmsvChannelDecomposition{r, g};
}

double eof_state(const TwoModeCovariance& sigma) {
    if (!is_physical(sigma))
        throw std::domain_error("eof_state: unphysical state");
    const double scale = std::max({1.0, std::abs(sigma.c1), std::abs(sigma.c2)});
    if (std::abs(sigma.c1) <= 1e-12 * scale && std::abs(sigma.c2) <= 1e-12 * scale)
        return 0.0;  // product state
    if (!sigma.is_balanced(1e-9))
        throw std::domain_error("eof_state: unsupported state (not balanced)");
    const auto dec = decompose_tmsv_channel(sigma);
    return eof_from_ro(ro_tmsv_through_channel(dec.r, dec.channel));
}

double log_negativity(const TwoModeCovariance& sigma) {
    const TwoModeCovariance pt{sigma.a, sigma.b, sigma.c1, -sigma.c2};
    const double nu = symplectic_eigenvalues(pt).nu_minus;
    if (nu <= 0.0) throw std::domain_error("log_negativity: degenerate partial transpose");
    return std::max(0.0, -std::log2(nu));
}

}  // namespace gausslab
