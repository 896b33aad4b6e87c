#pragma once

#include <vector>

#include "gausslab/channel.hpp"
#include "gausslab/covariance.hpp"
#include "gausslab/par.hpp"

namespace gausslab {

/// Zero-mean single-mode Gaussian state, quadrature variances in vacuum units.
struct SingleModeGaussian {
    double vx;
    double vp;
};

/// Pure squeezed vacuum: vx = e^{2r}, vp = e^{-2r} with r = artanh(zeta).
SingleModeGaussian squeezed_vacuum(const SqueezingParam& zeta);

/// Channel action on a single mode: v' = tau v + noise per quadrature.
SingleModeGaussian apply_channel_1mode(const SingleModeGaussian& s, const Channel& g);

/// Uhlmann fidelity of two zero-mean single-mode Gaussians:
/// F = 2 / (sqrt(Delta + delta) - sqrt(delta)) with Delta = det(V1+V2) and
/// delta = (det V1 - 1)(det V2 - 1).
double gaussian_fidelity_1mode(const SingleModeGaussian& s1, const SingleModeGaussian& s2);

/// Fidelity of a *pure* two-mode Gaussian against an arbitrary two-mode
/// Gaussian: the overlap 4 / sqrt(det(V1 + V2)).
double fidelity_pure_two_mode(const TwoModeCovariance& pure_in, const TwoModeCovariance& out);

/// One cell of the fidelity-pathology scan.
struct FidelityScanCell {
    double tau1;
    double tau2;
    double f1;          ///< two-mode fidelity through the loss channel alone
    double f2;          ///< two-mode fidelity through amplifier-then-loss
    double f1_single;   ///< same pipelines on the single-mode squeezed vacuum
    double f2_single;
    bool composite_eb;  ///< entanglement-breaking flag of the composite channel
    int region;         ///< I..IV encoded 1..4
};

struct FidelityScanResult {
    std::vector<FidelityScanCell> cells;  // row-major over (tau1, tau2)
    int n1;
    int n2;
    int region_count[4];
};

/// Scan of F1 vs F2 over a (tau1, tau2) lattice for a fixed input squeezing
/// and excess noises (eps1 thermal loss, eps2 thermal amplifier applied
/// before the loss).  Regions per the four-way partition:
/// I = (F1 < F2 and composite EB), II = EB only, IV = F1 < F2 only, III = rest.
FidelityScanResult appendix_a_scan(const SqueezingParam& zeta, double eps1, double eps2,
                                   int n1, int n2, double tau1_lo, double tau1_hi,
                                   double tau2_lo, double tau2_hi,
                                   ExecPolicy policy = ExecPolicy::parallel);

}  // namespace gausslab
