#pragma once

#include <vector>

#include "gausslab/channel.hpp"
#include "gausslab/covariance.hpp"
#include "gausslab/teleport.hpp"

namespace gausslab {

/// Heralded noiseless-amplification gain g >= 1; optionally derived from a
/// quantum-scissor beam-splitter ratio xi via g = sqrt((1-xi)/xi).
struct NlaGain {
    double g;

    explicit NlaGain(double gain) : g(gain) {
        if (!(gain >= 1.0) || !std::isfinite(gain))
            throw std::domain_error("NlaGain: gain must be finite and >= 1");
    }
    static NlaGain from_bs_ratio(double xi) {
        if (!(xi > 0.0) || xi > 1.0)
            throw std::domain_error("NlaGain: beam-splitter ratio must be in (0, 1]");
        return NlaGain(std::sqrt((1.0 - xi) / xi));
    }
    double bs_ratio() const { return 1.0 / (1.0 + g * g); }
};

/// Equivalent description of (TMSV -> loss -> successful NLA): a TMSV with
/// squeezing chi_e sent through the loss channel (tau_e, eps_e).
struct EffectiveParams {
    SqueezingParam chi_e;
    double tau_e;
    double eps_e;

    /// Covariance of the effective resource: a_e = (1+chi_e^2)/(1-chi_e^2),
    /// b_e = tau_e a_e + (1-tau_e) eps_e, c_e = 2 sqrt(tau_e) chi_e/(1-chi_e^2).
    TwoModeCovariance resource_covariance() const;
};

/// Plain-number version of the effective triple, usable at and beyond the
/// validity boundaries (where the typed EffectiveParams would be rejected).
struct RawEffectiveParams {
    double chi_e;
    double tau_e;
    double eps_e;
};

struct GainBounds {
    double g_chi;  ///< chi_e reaches 1 here
    double g_eps;  ///< the effective-loss description degenerates here (+inf for pure loss)
    double g_max;  ///< min(g_chi, g_eps)
};

/// Closed-form effective triple for a loss channel.  No domain clamping.
RawEffectiveParams effective_params_raw(const SqueezingParam& chi, const Channel& loss,
                                        const NlaGain& gain);

/// Validated effective triple; requires a (pure or thermal) loss channel and
/// gain below g_max.
EffectiveParams effective_params(const SqueezingParam& chi, const Channel& loss,
                                 const NlaGain& gain);

/// The two physicality bounds on the NLA gain and their minimum.
GainBounds gain_bounds(const SqueezingParam& chi, const Channel& loss);

/// Error-correction condition: g_max > 1/chi and the channel is not
/// entanglement breaking.
bool correctable(const SqueezingParam& chi, const Channel& loss);

/// Excess-noise parameter of the channel simulated at gain lambda by the
/// effective resource; satisfies (1 - lambda) theta = a lambda - 2 c sqrt(lambda) + b.
/// Diverges at lambda = 1 (use simulated_channel_from_effective there).
double theta(const EffectiveParams& eff, const TeleportGain& lam);

/// Channel simulated by the effective resource (valid at every gain,
/// including lambda = 1).
Channel simulated_channel_from_effective(const EffectiveParams& eff, const TeleportGain& lam);

/// Largest gain for which the simulated amplifier stays physical: the smaller
/// root of v(lambda) = lambda - 1, or +inf when the parabola never crosses
/// (the case for every physical effective loss state).
double lambda_max(const EffectiveParams& eff);
double lambda_max(const RawEffectiveParams& eff);

enum class PureChannelKind { Loss, Amplifier };

/// Transmissivity/gain of the pure channel simulated by a pure effective
/// resource: tau_e chi_e^2 for loss, tau_e / chi_e^2 for amplification.
double pure_sim_tau(const SqueezingParam& chi_e, double tau_e, PureChannelKind kind);

struct LambdaOptimum {
    double lambda_star;
    double eof_star;
};

/// Maximizes the output entanglement of teleporting tmsv(zeta) through the
/// effective resource over the teleportation gain.  Coarse 128-point grid over
/// the entangling gain window, then golden-section refinement to 1e-10.
LambdaOptimum optimize_lambda(const EffectiveParams& eff, const SqueezingParam& zeta);

struct CorrectionPoint {
    double gain;
    double resource_eof;
    double output_eof_star;
    double lambda_star;
};

/// Per-gain protocol summary: effective params, entanglement of the distilled
/// resource, and the gain-optimized output entanglement.
std::vector<CorrectionPoint> correction_curve(const Channel& loss, const SqueezingParam& chi,
                                              const SqueezingParam& zeta,
                                              const std::vector<NlaGain>& gains);

}  // namespace gausslab
