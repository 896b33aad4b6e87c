#include "gausslab/teleport.hpp"

#include <algorithm>

namespace gausslab {

Channel simulated_channel(const TwoModeCovariance& rho, const TeleportGain& lam) {
    if (!rho.is_balanced(1e-9))
        throw std::domain_error("simulated_channel: resource must be balanced (c2 = -c1)");
    const double l = lam.lambda;
    const double v = rho.a * l - 2.0 * rho.c1 * std::sqrt(l) + rho.b;
    return Channel{l, v};
}

ResourcePair resource_family(const Channel& g, const SymplecticSpectrum& spectrum) {
    if (!g.is_physical())
        throw std::domain_error("resource_family: unphysical channel");
    const double tau = g.tau, v = g.noise;
    if (!(tau > 0.0))
        throw std::domain_error("resource_family: tau must be positive");
    if (std::abs(tau - 1.0) < 1e-12)
        throw std::domain_error("resource_family: tau = 1 (additive noise) is outside the family's domain");
    const double nm = spectrum.nu_minus, np = spectrum.nu_plus;
    if (!(nm >= 1.0 - kPhysicalityTol) || !(np >= nm - 1e-12))
        throw std::domain_error("resource_family: spectrum must satisfy 1 <= nu_minus <= nu_plus");

    const double t1 = tau * nm - nm + v;  // v - (1-tau) nu_minus
    const double t2 = np - tau * np + v;  // v + (1-tau) nu_plus
    if (t1 < -1e-12 || t2 < -1e-12)
        throw std::domain_error("resource_family: spectrum incompatible with channel (negative radicand)");
    const double root = std::sqrt(tau * std::max(t1, 0.0) * std::max(t2, 0.0));
    const double d = (tau - 1.0) * (tau - 1.0);
    const double gap = np - nm;

    const auto member = [&](double sign) {
        const double a = ((1.0 - tau) * gap + (1.0 + tau) * v + sign * 2.0 * root) / d;
        const double b = (tau * (1.0 - tau) * gap + (1.0 + tau) * v + sign * 2.0 * root) / d;
        const double c = (tau * (1.0 - tau) * gap + 2.0 * tau * v + sign * (1.0 + tau) * root)
                         / (std::sqrt(tau) * d);
        return balanced_covariance(a, b, c);
    };
    return ResourcePair{member(+1.0), member(-1.0), spectrum};
}

OptimalResource optimal_resource(const Channel& g) {
    if (!g.is_physical())
        throw std::domain_error("optimal_resource: unphysical channel");
    if (classify(g) == ChannelClass::Identity)
        throw std::domain_error("optimal_resource: the identity channel cannot be simulated with finite energy");
    const double tau = g.tau, v = g.noise;
    const double rad = std::max((v + 1.0 - tau) * (v - 1.0 + tau), 0.0);
    double chi = (2.0 * std::sqrt(tau) - std::sqrt(rad)) / (tau + v + 1.0);
    chi = std::clamp(chi, 0.0, 1.0 - 1e-15);
    const auto s = SqueezingParam::from_tanh(chi);
    return OptimalResource{s, tmsv(s)};
}

TwoModeCovariance teleport_output(const TwoModeCovariance& sigma_in,
                                  const TwoModeCovariance& rho,
                                  const TeleportGain& lam) {
    return apply_to_mode2(sigma_in, simulated_channel(rho, lam));
}

GainWindow entangling_gain_window(const TwoModeCovariance& rho) {
    // v(lambda) < 1 + lambda between the roots of
    // (a-1) x^2 - 2 c x + (b-1) = 0 in x = sqrt(lambda).
    const double a = rho.a, b = rho.b, c = std::abs(rho.c1);
    if (a <= 1.0 + 1e-15) return GainWindow{0.0, 0.0};
    const double disc = c * c - (a - 1.0) * (b - 1.0);
    if (disc <= 0.0) return GainWindow{0.0, 0.0};
    const double xlo = (c - std::sqrt(disc)) / (a - 1.0);
    const double xhi = (c + std::sqrt(disc)) / (a - 1.0);
    return GainWindow{std::max(xlo, 0.0) * std::max(xlo, 0.0), xhi * xhi};
}

}  // namespace gausslab
