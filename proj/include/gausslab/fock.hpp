#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "gausslab/channel.hpp"
#include "gausslab/covariance.hpp"
#include "gausslab/nla.hpp"

namespace gausslab::fock {

/// Thrown when a truncated-basis operation would push non-negligible
/// amplitude past the cutoff; carries the cutoff that would suffice.
class CutoffError : public std::runtime_error {
public:
    CutoffError(const std::string& msg, int suggested)
        : std::runtime_error(msg), suggested_cutoff(suggested) {}
    int suggested_cutoff;
};

inline constexpr double kTailTol = 1e-10;

/// Pure two-mode state over the truncated number basis; amplitudes(n1, n2).
struct FockStateVector {
    Eigen::MatrixXcd amplitudes;
    int cutoff;

    int dim() const { return cutoff + 1; }
    double norm2() const { return amplitudes.squaredNorm(); }
    void normalize() { amplitudes /= std::sqrt(norm2()); }
};

/// Mixed two-mode state over the composite basis i = n1*(cutoff+1) + n2.
struct FockDensityMatrix {
    Eigen::MatrixXcd entries;
    int cutoff;

    int dim() const { return cutoff + 1; }
    double trace() const { return entries.trace().real(); }
    double hermiticity_error() const { return (entries - entries.adjoint()).cwiseAbs().maxCoeff(); }
    double min_eigenvalue() const;

    static FockDensityMatrix from_pure(const FockStateVector& psi);
};

/// Unnormalized pure branches whose (weighted) mixture represents a state;
/// the memory-light carrier for loss outputs at large cutoffs.
using BranchEnsemble = std::vector<Eigen::MatrixXcd>;

/// sqrt(1-chi^2) sum_n chi^n |n,n>.  Errors (with a suggested cutoff) when the
/// geometric tail above the cutoff exceeds tail_tol.
FockStateVector tmsv_fock(const SqueezingParam& chi, int cutoff, double tail_tol = kTailTol);

/// Ideal NLA g^n on the second mode: amplitudes scaled by g^{n2}, then
/// renormalized; reports the pre-normalization norm^2 as the success weight.
std::pair<FockStateVector, double> apply_ideal_nla(const FockStateVector& psi, const NlaGain& gain,
                                                   double tail_tol = kTailTol);

/// Loss channel on the second mode.  Pure loss uses the photon-subtraction
/// Kraus family directly; thermal loss couples a truncated thermal ancilla
/// (mean occupation (eps-1)/2) through a beam splitter and traces it out.
/// ancilla_cutoff < 0 selects one from the tail tolerance.
FockDensityMatrix apply_loss_fock(const FockStateVector& psi, const Channel& loss,
                                  int ancilla_cutoff = -1, double tail_tol = kTailTol);
FockDensityMatrix apply_loss_fock(const FockDensityMatrix& rho, const Channel& loss,
                                  int ancilla_cutoff = -1, double tail_tol = kTailTol);

/// Same channel, returned as unnormalized pure branches of the input vector.
BranchEnsemble loss_branch_ensemble(const FockStateVector& psi, const Channel& loss,
                                    int ancilla_cutoff = -1, double tail_tol = kTailTol);

/// Single quantum scissor on the second mode:
/// alpha|0> + beta|1> + ... -> (alpha|0> + g beta|1>)/sqrt(1+g^2).
std::pair<FockStateVector, double> apply_scissor_T1(const FockStateVector& psi, const NlaGain& gain);
std::pair<FockDensityMatrix, double> apply_scissor_T1(const FockDensityMatrix& rho, const NlaGain& gain);

/// Diagonal weights of the N-scissor truncation operator Pi_N:
/// (1+g^2)^{-N/2} N!/((N-n)! N^n) for n <= N, zero above.
Eigen::VectorXd truncation_operator_PiN(int N, const NlaGain& gain);

/// T_N = Pi_N g^n applied to the second mode.
std::pair<FockStateVector, double> apply_scissor_TN(const FockStateVector& psi, int N, const NlaGain& gain);

/// Second moments in the (a, b, c1, c2) standard form.  Rejects states with
/// non-negligible first moments (everything here is zero-mean).
TwoModeCovariance covariance_from_fock(const FockStateVector& psi);
TwoModeCovariance covariance_from_fock(const FockDensityMatrix& rho);
TwoModeCovariance covariance_from_fock(const BranchEnsemble& branches);

/// Base-2 von Neumann entropy of the reduced single-mode state of a
/// normalized pure state.
double entropy_of_entanglement(const FockStateVector& psi);

/// Fock matrix of the two-mode beam splitter exp[theta(a^dag b - a b^dag)]
/// restricted to signal dim (ds+1) and ancilla dims (da_in+1) -> (da_out+1);
/// element order M[(m*Dk + k), (n*Dl + l)].  Exposed for tests.
Eigen::MatrixXd beam_splitter_fock(double theta, int ds, int da_in, int da_out);

}  // namespace gausslab::fock
