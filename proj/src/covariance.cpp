#include "gausslab/covariance.hpp"

#include <algorithm>

namespace gausslab {

TwoModeCovariance tmsv(const SqueezingParam& s) {
    const double chi = s.chi();
    const double denom = 1.0 - chi * chi;
    const double diag = (1.0 + chi * chi) / denom;
    const double corr = 2.0 * chi / denom;
    return balanced_covariance(diag, diag, corr);
}

SymplecticSpectrum symplectic_eigenvalues(const TwoModeCovariance& sigma) {
    const double a = sigma.a, b = sigma.b;
    if (sigma.is_balanced()) {
        const double c = sigma.c1;
        const double rad = (a + b) * (a + b) - 4.0 * c * c;
        const double scale = std::max(1.0, (a + b) * (a + b));
        if (rad < -1e-12 * scale)
            throw std::domain_error("symplectic_eigenvalues: malformed matrix (negative discriminant)");
        const double root = std::sqrt(std::max(rad, 0.0));
        const double gap = std::abs(a - b);
        return SymplecticSpectrum{(root - gap) / 2.0, (root + gap) / 2.0};
    }
    const double delta = a * a + b * b + 2.0 * sigma.c1 * sigma.c2;
    const double det = (a * b - sigma.c1 * sigma.c1) * (a * b - sigma.c2 * sigma.c2);
    const double disc = delta * delta - 4.0 * det;
    const double scale = std::max(1.0, delta * delta);
    if (disc < -1e-12 * scale)
        throw std::domain_error("symplectic_eigenvalues: malformed matrix (negative discriminant)");
    const double root = std::sqrt(std::max(disc, 0.0));
    const double lo = (delta - root) / 2.0;
    const double hi = (delta + root) / 2.0;
    if (lo < -1e-12 * scale)
        throw std::domain_error("symplectic_eigenvalues: malformed matrix (negative nu^2)");
    return SymplecticSpectrum{std::sqrt(std::max(lo, 0.0)), std::sqrt(std::max(hi, 0.0))};
}

bool is_physical(const TwoModeCovariance& sigma, double tol) {
    if (tol < 0.0) throw std::invalid_argument("is_physical: tol must be >= 0");
    // Positive semidefiniteness of the standard form reduces to these minors.
    if (!(sigma.a > 0.0) || !(sigma.b > 0.0)) return false;
    const double ab = sigma.a * sigma.b;
    const double scale = std::max(1.0, ab);
    if (ab - sigma.c1 * sigma.c1 < -tol * scale) return false;
    if (ab - sigma.c2 * sigma.c2 < -tol * scale) return false;
    try {
        return symplectic_eigenvalues(sigma).nu_minus >= 1.0 - tol;
    } catch (const std::domain_error&) {
        return false;
    }
}

double mean_energy_per_mode(const TwoModeCovariance& sigma) {
    return (sigma.trace() - 4.0) / 8.0;
}

}  // namespace gausslab
