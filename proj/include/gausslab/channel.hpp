#pragma once

#include <string>

#include "gausslab/covariance.hpp"

namespace gausslab {

/// Phase-insensitive single-mode Gaussian channel: variances map as
/// V -> tau V + noise.  Physical iff noise >= |1 - tau| (identity excepted).
struct Channel {
    double tau;    ///< transmissivity (tau < 1) or gain (tau > 1)
    double noise;  ///< added noise v, vacuum units

    /// Build from (tau, excess noise): noise = |1 - tau| * eps.
    static Channel from_excess(double tau, double eps) {
        return Channel{tau, std::abs(1.0 - tau) * eps};
    }

    static Channel identity() { return Channel{1.0, 0.0}; }

    /// Excess noise eps = noise / |1 - tau|; undefined at tau = 1.
    double excess() const {
        if (tau == 1.0)
            throw std::domain_error("Channel::excess: undefined for tau = 1");
        return noise / std::abs(1.0 - tau);
    }

    bool is_physical(double tol = kPhysicalityTol) const {
        return noise >= std::abs(1.0 - tau) - tol && tau >= 0.0 && noise >= -tol;
    }
};

enum class ChannelClass {
    Identity,
    PureLoss,
    ThermalLoss,
    PureAmplifier,
    ThermalAmplifier,
    AdditiveNoise,
    Unphysical,
};

std::string to_string(ChannelClass c);

/// Exhaustive classification under tolerance tol on |tau - 1| and |noise - |1-tau||.
ChannelClass classify(const Channel& g, double tol = 1e-9);

/// v >= 1 + |tau| (within tol) destroys all input entanglement.
bool is_entanglement_breaking(const Channel& g, double tol = 1e-9);

/// Composite channel with `first` applied first: tau = t1 t2, noise = t2 v1 + v2.
Channel compose(const Channel& first, const Channel& second);

/// Channel action on the second mode: a' = a, b' = tau b + v, c' = sqrt(tau) c.
/// Throws if the channel is unphysical.
TwoModeCovariance apply_to_mode2(const TwoModeCovariance& sigma, const Channel& g);

}  // namespace gausslab
