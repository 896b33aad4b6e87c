#pragma once

#include <cmath>
#include <stdexcept>

namespace gausslab {

/// Default tolerance for physicality checks (nu_minus >= 1 - tol).
inline constexpr double kPhysicalityTol = 1e-9;

/// Two-mode squeezing strength, kept as the pair (chi, r) with chi = tanh r.
/// chi lives in [0, 1); chi -> 1 is the infinite-energy limit.
class SqueezingParam {
public:
    static SqueezingParam from_tanh(double chi) {
        if (!(chi >= 0.0) || chi >= 1.0)
            throw std::domain_error("SqueezingParam: tanh-parameter must be in [0, 1)");
        return SqueezingParam(chi, std::atanh(chi));
    }
    static SqueezingParam from_r(double r) {
        if (!(r >= 0.0) || !std::isfinite(r))
            throw std::domain_error("SqueezingParam: r must be finite and >= 0");
        return SqueezingParam(std::tanh(r), r);
    }

    double chi() const { return chi_; }
    double r() const { return r_; }

private:
    SqueezingParam(double chi, double r) : chi_(chi), r_(r) {}
    double chi_;
    double r_;
};

/// Second moments of a zero-mean two-mode Gaussian state in standard form:
/// diag blocks (a, a) and (b, b), off-diagonal x-x correlation c1 and
/// p-p correlation c2.  Vacuum variance is 1 (x = a + a^dag).
struct TwoModeCovariance {
    double a;
    double b;
    double c1;
    double c2;

    /// Balanced (resource) form has c2 = -c1.
    bool is_balanced(double tol = 1e-12) const {
        const double scale = std::max({1.0, std::abs(c1), std::abs(c2)});
        return std::abs(c1 + c2) <= tol * scale;
    }

    double trace() const { return 2.0 * a + 2.0 * b; }
};

/// Balanced-form helper: entries (a, c, -c, b).
inline TwoModeCovariance balanced_covariance(double a, double b, double c) {
    return TwoModeCovariance{a, b, c, -c};
}

struct SymplecticSpectrum {
    double nu_minus;
    double nu_plus;
};

/// Two-mode squeezed vacuum: a = b = (1+chi^2)/(1-chi^2), c1 = -c2 = 2 chi/(1-chi^2).
TwoModeCovariance tmsv(const SqueezingParam& s);

/// Ordered symplectic spectrum.  Balanced states use the closed form
/// nu_pm = (sqrt((a+b)^2 - 4 c^2) +- |a-b|)/2; the general case goes through
/// the symplectic invariants Delta = a^2 + b^2 + 2 c1 c2 and det(sigma).
/// Throws if the discriminant is negative beyond tolerance (malformed matrix).
SymplecticSpectrum symplectic_eigenvalues(const TwoModeCovariance& sigma);

/// Uncertainty-principle check: positive-definite second moments and
/// nu_minus >= 1 - tol.
bool is_physical(const TwoModeCovariance& sigma, double tol = kPhysicalityTol);

/// <n> per mode = (tr(sigma) - 4)/8.
double mean_energy_per_mode(const TwoModeCovariance& sigma);

}  // namespace gausslab
