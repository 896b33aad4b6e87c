#include "gausslab/fock.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace gausslab::fock {

namespace {

std::vector<double> log_factorials(int n) {
    std::vector<double> lg(static_cast<std::size_t>(n) + 1, 0.0);
    for (int i = 2; i <= n; ++i) lg[i] = lg[i - 1] + std::log(static_cast<double>(i));
    return lg;
}

Eigen::MatrixXcd annihilation(int dim) {
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(dim, dim);
    for (int n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
    return a;
}

/// <psi| O1 (x) O2 |phi> for amplitude matrices (real part).
double pair_expectation(const Eigen::MatrixXcd& psi, const Eigen::MatrixXcd& o1,
                        const Eigen::MatrixXcd& o2) {
    const Eigen::MatrixXcd phi = o1 * psi * o2.transpose();
    return psi.cwiseProduct(phi.conjugate()).sum().real();
}

struct Moments {
    double x1 = 0, p1 = 0, x2 = 0, p2 = 0;        // first moments
    double a = 0, b = 0, c1 = 0, c2 = 0, total = 0;  // weighted second moments
};

void accumulate_vector_moments(const Eigen::MatrixXcd& psi, Moments& m) {
    const int d = static_cast<int>(psi.rows());
    const Eigen::MatrixXcd an = annihilation(d);
    const Eigen::MatrixXcd x = an + an.adjoint();
    const Eigen::MatrixXcd p = std::complex<double>(0, 1) * (an.adjoint() - an);
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(d, d);
    m.x1 += pair_expectation(psi, x, id);
    m.p1 += pair_expectation(psi, p, id);
    m.x2 += pair_expectation(psi, id, x);
    m.p2 += pair_expectation(psi, id, p);
    m.a += 0.5 * (pair_expectation(psi, x * x, id) + pair_expectation(psi, p * p, id));
    m.b += 0.5 * (pair_expectation(psi, id, x * x) + pair_expectation(psi, id, p * p));
    m.c1 += pair_expectation(psi, x, x);
    m.c2 += pair_expectation(psi, p, p);
    m.total += psi.squaredNorm();
}

TwoModeCovariance covariance_from_moments(const Moments& m) {
    const double t = m.total;
    if (!(t > 0.0))
        throw std::runtime_error("covariance_from_fock: zero-norm state");
    const double mean = std::max({std::abs(m.x1), std::abs(m.p1), std::abs(m.x2), std::abs(m.p2)}) / t;
    if (mean > 1e-8)
        throw std::runtime_error("covariance_from_fock: non-negligible first moments");
    return TwoModeCovariance{m.a / t, m.b / t, m.c1 / t, m.c2 / t};
}

/// Mass on the outermost band (n1 = cutoff or n2 = cutoff), relative to norm^2.
double band_mass(const Eigen::MatrixXcd& amps, int band) {
    double s = amps.row(band).squaredNorm() + amps.col(band).squaredNorm()
               - std::norm(amps(band, band));
    return s / amps.squaredNorm();
}

int suggest_cutoff(const Eigen::MatrixXcd& amps, double tail_tol) {
    const int n = static_cast<int>(amps.rows()) - 1;
    const double mn = band_mass(amps, n);
    const double mp = band_mass(amps, n - 1);
    if (!(mn > 0.0)) return n;
    if (!(mp > mn)) return 2 * n + 8;  // tail not decaying; be generous
    const double ratio = mn / mp;
    const int extra = static_cast<int>(std::ceil(std::log(tail_tol / mn) / std::log(ratio)));
    return n + std::max(extra, 1) + 2;
}

}  // namespace

double FockDensityMatrix::min_eigenvalue() const {
    const Eigen::MatrixXcd herm = 0.5 * (entries + entries.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(herm, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

FockDensityMatrix FockDensityMatrix::from_pure(const FockStateVector& psi) {
    const int d = psi.dim();
    Eigen::VectorXcd v(d * d);
    for (int n1 = 0; n1 < d; ++n1)
        for (int n2 = 0; n2 < d; ++n2) v(n1 * d + n2) = psi.amplitudes(n1, n2);
    FockDensityMatrix rho{v * v.adjoint(), psi.cutoff};
    return rho;
}

FockStateVector tmsv_fock(const SqueezingParam& chi, int cutoff, double tail_tol) {
    if (cutoff < 1) throw std::invalid_argument("tmsv_fock: cutoff must be >= 1");
    const double x = chi.chi();
    const double tail = std::pow(x, 2.0 * (cutoff + 1));
    if (tail > tail_tol) {
        const int needed = static_cast<int>(std::ceil(std::log(tail_tol) / (2.0 * std::log(x))));
        throw CutoffError("tmsv_fock: cutoff " + std::to_string(cutoff)
                              + " leaves tail mass " + std::to_string(tail)
                              + "; use at least " + std::to_string(needed),
                          needed);
    }
    FockStateVector psi{Eigen::MatrixXcd::Zero(cutoff + 1, cutoff + 1), cutoff};
    double amp = std::sqrt(1.0 - x * x);
    for (int n = 0; n <= cutoff; ++n) {
        psi.amplitudes(n, n) = amp;
        amp *= x;
    }
    psi.normalize();
    return psi;
}

std::pair<FockStateVector, double> apply_ideal_nla(const FockStateVector& psi, const NlaGain& gain,
                                                   double tail_tol) {
    FockStateVector out = psi;
    double scale = 1.0;
    for (int n2 = 0; n2 <= psi.cutoff; ++n2) {
        out.amplitudes.col(n2) *= scale;
        scale *= gain.g;
    }
    const double weight = out.norm2() / psi.norm2();
    if (band_mass(out.amplitudes, psi.cutoff) > tail_tol)
        throw CutoffError("apply_ideal_nla: amplified tail exceeds tolerance",
                          suggest_cutoff(out.amplitudes, tail_tol));
    out.normalize();
    return {out, weight};
}

Eigen::MatrixXd beam_splitter_fock(double theta, int ds, int da_in, int da_out) {
    const double t = std::cos(theta), r = std::sin(theta);
    const auto lg = log_factorials(ds + da_in + 1);
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero((ds + 1) * (da_out + 1), (ds + 1) * (da_in + 1));
    for (int n = 0; n <= ds; ++n) {
        for (int l = 0; l <= da_in; ++l) {
            // B (a+)^n (b+)^l |00> expands over (t a+ - r b+)^n (r a+ + t b+)^l.
            for (int j = 0; j <= n; ++j) {
                for (int i = 0; i <= l; ++i) {
                    const int mm = j + i;
                    const int k = (n - j) + (l - i);
                    if (mm > ds || k > da_out) continue;
                    const double logmag = lg[n] - lg[j] - lg[n - j] + lg[l] - lg[i] - lg[l - i]
                                          + 0.5 * (lg[mm] + lg[k] - lg[n] - lg[l]);
                    double amp = std::exp(logmag) * std::pow(t, j) * std::pow(r, i)
                                 * std::pow(t, l - i);
                    if ((n - j) % 2 != 0) amp = -amp;
                    amp *= std::pow(r, n - j);
                    m(mm * (da_out + 1) + k, n * (da_in + 1) + l) += amp;
                }
            }
        }
    }
    return m;
}

namespace {

int thermal_ancilla_cutoff(double eps, double tail_tol) {
    const double nbar = (eps - 1.0) / 2.0;
    if (nbar <= 0.0) return 0;
    const double q = nbar / (1.0 + nbar);
    return std::max(0, static_cast<int>(std::ceil(std::log(tail_tol) / std::log(q))) - 1);
}

/// Kraus family {E_{l,k}} of the (thermal) loss channel on one mode.
std::vector<Eigen::MatrixXd> loss_kraus(const Channel& loss, int dim, int ancilla_cutoff,
                                        double tail_tol) {
    const auto cls = classify(loss);
    if (cls != ChannelClass::PureLoss && cls != ChannelClass::ThermalLoss && cls != ChannelClass::Identity)
        throw std::invalid_argument("apply_loss_fock: expected a loss channel");
    const double tau = loss.tau;
    const double eps = (cls == ChannelClass::Identity) ? 1.0 : loss.excess();
    const double nbar = (eps - 1.0) / 2.0;

    const int needed = thermal_ancilla_cutoff(eps, tail_tol);
    int la = ancilla_cutoff;
    if (la < 0) la = needed;
    if (la < needed)
        throw CutoffError("apply_loss_fock: ancilla cutoff " + std::to_string(la)
                              + " insufficient for eps = " + std::to_string(eps)
                              + "; use at least " + std::to_string(needed),
                          needed);

    std::vector<Eigen::MatrixXd> kraus;
    const int ds = dim - 1;
    if (la == 0) {
        // vacuum ancilla: photon-subtraction operators A_k
        const auto lg = log_factorials(ds);
        for (int k = 0; k <= ds; ++k) {
            Eigen::MatrixXd a = Eigen::MatrixXd::Zero(dim, dim);
            for (int n = k; n <= ds; ++n) {
                const double logc = 0.5 * (lg[n] - lg[k] - lg[n - k]);
                a(n - k, n) = std::exp(logc) * std::pow(tau, 0.5 * (n - k))
                              * std::pow(1.0 - tau, 0.5 * k);
            }
            kraus.push_back(std::move(a));
        }
        return kraus;
    }

    const double theta = std::acos(std::sqrt(tau));
    const int da_out = ds + la;  // photon-number conservation bound
    const Eigen::MatrixXd bs = beam_splitter_fock(theta, ds, la, da_out);
    const double q = nbar / (1.0 + nbar);
    for (int l = 0; l <= la; ++l) {
        const double wl = (1.0 - q) * std::pow(q, l);
        for (int k = 0; k <= da_out; ++k) {
            Eigen::MatrixXd e(dim, dim);
            for (int mm = 0; mm < dim; ++mm)
                for (int n = 0; n < dim; ++n)
                    e(mm, n) = bs(mm * (da_out + 1) + k, n * (la + 1) + l);
            e *= std::sqrt(wl);
            if (e.cwiseAbs().maxCoeff() > 1e-300) kraus.push_back(std::move(e));
        }
    }
    return kraus;
}

}  // namespace

BranchEnsemble loss_branch_ensemble(const FockStateVector& psi, const Channel& loss,
                                    int ancilla_cutoff, double tail_tol) {
    const auto kraus = loss_kraus(loss, psi.dim(), ancilla_cutoff, tail_tol);
    BranchEnsemble out;
    out.reserve(kraus.size());
    for (const auto& e : kraus) {
        Eigen::MatrixXcd branch = psi.amplitudes * e.transpose();
        if (branch.squaredNorm() > 1e-300) out.push_back(std::move(branch));
    }
    return out;
}

FockDensityMatrix apply_loss_fock(const FockStateVector& psi, const Channel& loss,
                                  int ancilla_cutoff, double tail_tol) {
    const auto branches = loss_branch_ensemble(psi, loss, ancilla_cutoff, tail_tol);
    const int d = psi.dim();
    Eigen::MatrixXcd stacked(d * d, static_cast<int>(branches.size()));
    for (std::size_t j = 0; j < branches.size(); ++j)
        for (int n1 = 0; n1 < d; ++n1)
            for (int n2 = 0; n2 < d; ++n2)
                stacked(n1 * d + n2, static_cast<int>(j)) = branches[j](n1, n2);
    return FockDensityMatrix{stacked * stacked.adjoint(), psi.cutoff};
}

FockDensityMatrix apply_loss_fock(const FockDensityMatrix& rho, const Channel& loss,
                                  int ancilla_cutoff, double tail_tol) {
    const int d = rho.dim();
    const auto kraus = loss_kraus(loss, d, ancilla_cutoff, tail_tol);
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(d * d, d * d);
    for (const auto& e : kraus) {
        const Eigen::MatrixXcd ec = e.cast<std::complex<double>>();
        for (int m1 = 0; m1 < d; ++m1)
            for (int n1 = 0; n1 < d; ++n1)
                out.block(m1 * d, n1 * d, d, d) +=
                    ec * rho.entries.block(m1 * d, n1 * d, d, d) * ec.adjoint();
    }
    return FockDensityMatrix{std::move(out), rho.cutoff};
}

namespace {

Eigen::VectorXd scissor_t1_diag(int dim, double g) {
    Eigen::VectorXd dgl = Eigen::VectorXd::Zero(dim);
    const double norm = 1.0 / std::sqrt(1.0 + g * g);
    dgl(0) = norm;
    if (dim > 1) dgl(1) = g * norm;
    return dgl;
}

}  // namespace

std::pair<FockStateVector, double> apply_scissor_T1(const FockStateVector& psi, const NlaGain& gain) {
    const Eigen::VectorXd dgl = scissor_t1_diag(psi.dim(), gain.g);
    FockStateVector out = psi;
    for (int n2 = 0; n2 < psi.dim(); ++n2) out.amplitudes.col(n2) *= dgl(n2);
    const double weight = out.norm2() / psi.norm2();
    out.normalize();
    return {out, weight};
}

std::pair<FockDensityMatrix, double> apply_scissor_T1(const FockDensityMatrix& rho, const NlaGain& gain) {
    const int d = rho.dim();
    const Eigen::VectorXd dgl = scissor_t1_diag(d, gain.g);
    Eigen::VectorXd full(d * d);
    for (int n1 = 0; n1 < d; ++n1)
        for (int n2 = 0; n2 < d; ++n2) full(n1 * d + n2) = dgl(n2);
    Eigen::MatrixXcd out = full.asDiagonal() * rho.entries * full.asDiagonal();
    const double tr0 = rho.trace();
    FockDensityMatrix result{std::move(out), rho.cutoff};
    const double weight = result.trace() / tr0;
    result.entries /= result.trace();
    return {result, weight};
}

Eigen::VectorXd truncation_operator_PiN(int N, const NlaGain& gain) {
    if (N < 1) throw std::invalid_argument("truncation_operator_PiN: N must be >= 1");
    Eigen::VectorXd w(N + 1);
    const double front = std::pow(1.0 / (1.0 + gain.g * gain.g), 0.5 * N);
    const auto lg = log_factorials(N);
    for (int n = 0; n <= N; ++n)
        w(n) = front * std::exp(lg[N] - lg[N - n] - n * std::log(static_cast<double>(N)));
    return w;
}

std::pair<FockStateVector, double> apply_scissor_TN(const FockStateVector& psi, int N,
                                                    const NlaGain& gain) {
    const Eigen::VectorXd pi_n = truncation_operator_PiN(N, gain);
    FockStateVector out = psi;
    double gn = 1.0;
    for (int n2 = 0; n2 < psi.dim(); ++n2) {
        const double w = (n2 <= N) ? pi_n(n2) * gn : 0.0;
        out.amplitudes.col(n2) *= w;
        gn *= gain.g;
    }
    const double weight = out.norm2() / psi.norm2();
    out.normalize();
    return {out, weight};
}

TwoModeCovariance covariance_from_fock(const FockStateVector& psi) {
    Moments m;
    accumulate_vector_moments(psi.amplitudes, m);
    return covariance_from_moments(m);
}

TwoModeCovariance covariance_from_fock(const BranchEnsemble& branches) {
    if (branches.empty()) throw std::invalid_argument("covariance_from_fock: empty ensemble");
    Moments m;
    for (const auto& b : branches) accumulate_vector_moments(b, m);
    return covariance_from_moments(m);
}

TwoModeCovariance covariance_from_fock(const FockDensityMatrix& rho) {
    const int d = rho.dim();
    const Eigen::MatrixXcd an = annihilation(d);
    const Eigen::MatrixXcd x = an + an.adjoint();
    const Eigen::MatrixXcd p = std::complex<double>(0, 1) * (an.adjoint() - an);
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(d, d);

    const auto expect = [&](const Eigen::MatrixXcd& o1, const Eigen::MatrixXcd& o2) {
        std::complex<double> s = 0.0;
        for (int m1 = 0; m1 < d; ++m1)
            for (int n1 = 0; n1 < d; ++n1) {
                if (o1(n1, m1) == std::complex<double>(0.0)) continue;
                s += o1(n1, m1) * (rho.entries.block(m1 * d, n1 * d, d, d) * o2).trace();
            }
        return s.real();
    };

    Moments m;
    m.total = rho.trace();
    m.x1 = expect(x, id);
    m.p1 = expect(p, id);
    m.x2 = expect(id, x);
    m.p2 = expect(id, p);
    m.a = 0.5 * (expect(x * x, id) + expect(p * p, id));
    m.b = 0.5 * (expect(id, x * x) + expect(id, p * p));
    m.c1 = expect(x, x);
    m.c2 = expect(p, p);
    return covariance_from_moments(m);
}

double entropy_of_entanglement(const FockStateVector& psi) {
    if (std::abs(psi.norm2() - 1.0) > 1e-8)
        throw std::domain_error("entropy_of_entanglement: state is not normalized (not pure within tolerance)");
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(psi.amplitudes);
    double s = 0.0;
    for (int i = 0; i < svd.singularValues().size(); ++i) {
        const double lam = svd.singularValues()(i) * svd.singularValues()(i);
        if (lam > 1e-18) s -= lam * std::log2(lam);
    }
    return s;
}

}  // namespace gausslab::fock
