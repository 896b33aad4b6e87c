#pragma once

#include "gausslab/channel.hpp"
#include "gausslab/covariance.hpp"

namespace gausslab {

/// Entanglement of formation in ebits from the minimum preparatory two-mode
/// squeezing r_o:  cosh^2(r_o) log2 cosh^2(r_o) - sinh^2(r_o) log2 sinh^2(r_o).
double eof_from_ro(double ro);

/// Minimum preparatory squeezing of the state obtained by sending the second
/// arm of a two-mode squeezed vacuum with squeezing r through channel g.
/// Clamped to zero for entanglement-breaking channels and negative evaluations.
double ro_tmsv_through_channel(double r, const Channel& g);

/// Infinite-squeezing (Choi-state) limit of the above.  Two branches:
/// tau != 1 and the additive-noise case tau = 1, where r_o = ln(4/v^2)/4.
/// The identity channel diverges and is rejected.
double ro_choi(const Channel& g);

struct TmsvChannelDecomposition {
    double r;         ///< input squeezing, cosh(2r) = a
    Channel channel;  ///< channel on the second mode regenerating the state
};

/// Inverts the TMSV-through-channel construction for balanced states with a
/// pure first mode: r = arccosh(a)/2, tau = c1^2/(a^2-1), noise = b - tau a.
/// Throws if a <= 1, c1 <= 0, or the recovered channel is unphysical.
TmsvChannelDecomposition decompose_tmsv_channel(const TwoModeCovariance& sigma);

/// Entanglement of formation of states in the mode-1-pure balanced family
/// (and of product states, which carry none).  States outside the family are
/// rejected rather than approximated.
double eof_state(const TwoModeCovariance& sigma);

/// max(0, -log2 nu-tilde_minus) with nu-tilde from the partial transpose
/// (sign flip of c2).
double log_negativity(const TwoModeCovariance& sigma);

}  // namespace gausslab
