#include "gausslab/channel.hpp"

namespace gausslab {

std::string to_string(ChannelClass c) {
    switch (c) {
        case ChannelClass::Identity: return "identity";
        case ChannelClass::PureLoss: return "pure-loss";
        case ChannelClass::ThermalLoss: return "thermal-loss";
        case ChannelClass::PureAmplifier: return "pure-amplifier";
        case ChannelClass::ThermalAmplifier: return "thermal-amplifier";
        case ChannelClass::AdditiveNoise: return "additive-noise";
        case ChannelClass::Unphysical: return "unphysical";
    }
    return "unknown";
}

ChannelClass classify(const Channel& g, double tol) {
    if (g.tau < -tol || g.noise < -tol) return ChannelClass::Unphysical;
    const double gap = std::abs(1.0 - g.tau);
    if (g.noise < gap - tol) return ChannelClass::Unphysical;
    if (gap <= tol) {
        if (g.noise <= tol) return ChannelClass::Identity;
        return ChannelClass::AdditiveNoise;
    }
    const bool pure = std::abs(g.noise - gap) <= tol;
    if (g.tau < 1.0) return pure ? ChannelClass::PureLoss : ChannelClass::ThermalLoss;
    return pure ? ChannelClass::PureAmplifier : ChannelClass::ThermalAmplifier;
}

bool is_entanglement_breaking(const Channel& g, double tol) {
    return g.noise >= 1.0 + std::abs(g.tau) - tol;
}

Channel compose(const Channel& first, const Channel& second) {
    return Channel{first.tau * second.tau, second.tau * first.noise + second.noise};
}

TwoModeCovariance apply_to_mode2(const TwoModeCovariance& sigma, const Channel& g) {
    if (!g.is_physical())
        throw std::domain_error("apply_to_mode2: unphysical channel");
    const double root = std::sqrt(g.tau);
    return TwoModeCovariance{sigma.a, g.tau * sigma.b + g.noise, root * sigma.c1, root * sigma.c2};
}

}  // namespace gausslab
