#pragma once

#include "gausslab/channel.hpp"
#include "gausslab/covariance.hpp"

namespace gausslab {

/// Classical-channel gain of the teleportation protocol.
struct TeleportGain {
    double lambda;

    explicit TeleportGain(double lam) : lambda(lam) {
        if (!(lam >= 0.0) || !std::isfinite(lam))
            throw std::domain_error("TeleportGain: lambda must be finite and >= 0");
    }
};

/// Channel simulated by teleporting through a balanced resource state:
/// tau = lambda, v = a lambda - 2 c sqrt(lambda) + b.
Channel simulated_channel(const TwoModeCovariance& rho, const TeleportGain& lam);

/// The two candidate resource states with a prescribed symplectic spectrum
/// that simulate a target channel at lambda = tau.
struct ResourcePair {
    TwoModeCovariance plus;
    TwoModeCovariance minus;
    SymplecticSpectrum spectrum_used;
};

/// Solves the simulation system for resource entries (a, b, c) given the
/// channel and the desired spectrum.  Requires tau > 0, tau != 1, and a
/// spectrum compatible with the channel (nonnegative radicand).
ResourcePair resource_family(const Channel& g, const SymplecticSpectrum& spectrum);

struct OptimalResource {
    SqueezingParam chi_opt;
    TwoModeCovariance state;
};

/// Minimum-energy resource simulating g: the pure state with
/// chi = (2 sqrt(tau) - sqrt((v+1-tau)(v-1+tau)))/(tau+v+1), clamped to [0, 1).
/// The identity channel is rejected (finite-energy simulation impossible).
OptimalResource optimal_resource(const Channel& g);

/// Teleportation of sigma_in through resource rho at gain lam; equals
/// apply_to_mode2(sigma_in, simulated_channel(rho, lam)).
TwoModeCovariance teleport_output(const TwoModeCovariance& sigma_in,
                                  const TwoModeCovariance& rho,
                                  const TeleportGain& lam);

/// Range of gains for which the simulated channel is *not* entanglement
/// breaking (roots of v(lambda) = 1 + lambda).  Empty (lo >= hi) when the
/// resource cannot distribute entanglement at any gain.
struct GainWindow {
    double lo;
    double hi;
    bool empty() const { return !(lo < hi); }
};
GainWindow entangling_gain_window(const TwoModeCovariance& rho);

}  // namespace gausslab
