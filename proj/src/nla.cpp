#include "gausslab/nla.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "gausslab/entanglement.hpp"
#include "gausslab/golden.hpp"

namespace gausslab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_loss(const Channel& g, const char* who) {
    const auto cls = classify(g);
    if (cls != ChannelClass::PureLoss && cls != ChannelClass::ThermalLoss)
        throw std::invalid_argument(std::string(who) + ": expected a pure or thermal loss channel");
}

}  // namespace

TwoModeCovariance EffectiveParams::resource_covariance() const {
    const double x = chi_e.chi();
    const double denom = 1.0 - x * x;
    const double a = (1.0 + x * x) / denom;
    const double b = tau_e * a + (1.0 - tau_e) * eps_e;
    const double c = 2.0 * std::sqrt(tau_e) * x / denom;
    return balanced_covariance(a, b, c);
}

RawEffectiveParams effective_params_raw(const SqueezingParam& chi, const Channel& loss,
                                        const NlaGain& gain) {
    require_loss(loss, "effective_params_raw");
    const double x = chi.chi(), tau = loss.tau, eps = loss.excess();
    const double g2 = gain.g * gain.g;
    const double G = g2 - 1.0;

    const double chie = x * std::sqrt((2.0 + G * (eps * (tau - 1.0) + tau + 1.0))
                                      / (2.0 + (eps - 1.0) * (tau - 1.0) * G));
    const double taue = 4.0 * g2 * tau
                        / ((eps + 1.0 + (eps - 1.0) * ((tau - 1.0) * g2 - tau))
                           * ((eps + 1.0) * (1.0 - tau) + (tau + 1.0 + eps * (tau - 1.0)) * g2));
    const double num = tau + 1.0 + eps * (2.0 + eps * (1.0 - tau))
                       + (eps - 1.0) * (tau + 1.0 + eps * (tau - 1.0)) * g2 * g2;
    const double den = (eps + 1.0 - (eps - 1.0) * g2) * (eps + 1.0 - (eps - 1.0) * g2)
                       - tau * (eps * eps - 1.0) * G * G;
    return RawEffectiveParams{chie, taue, num / den};
}

EffectiveParams effective_params(const SqueezingParam& chi, const Channel& loss,
                                 const NlaGain& gain) {
    const auto bounds = gain_bounds(chi, loss);
    if (gain.g > bounds.g_max)
        throw std::domain_error("effective_params: gain exceeds g_max, output state unphysical");
    const auto raw = effective_params_raw(chi, loss, gain);
    if (!(raw.chi_e >= 0.0) || raw.chi_e >= 1.0 || !(raw.eps_e >= 1.0 - kPhysicalityTol)
        || !std::isfinite(raw.eps_e))
        throw std::domain_error("effective_params: parameters outside the physical branch");
    return EffectiveParams{SqueezingParam::from_tanh(raw.chi_e), raw.tau_e,
                           std::max(raw.eps_e, 1.0)};
}

GainBounds gain_bounds(const SqueezingParam& chi, const Channel& loss) {
    require_loss(loss, "gain_bounds");
    const double x2 = chi.chi() * chi.chi(), tau = loss.tau, eps = loss.excess();

    const double num_chi = tau * (1.0 - eps) + (eps + 1.0) * (1.0 + (tau - 1.0) * x2);
    const double den_chi = tau - 1.0 + eps * (tau - 1.0) * (x2 - 1.0) + (tau + 1.0) * x2;
    double g_chi = kInf;
    if (den_chi > 0.0 && num_chi > 0.0) g_chi = std::sqrt(num_chi / den_chi);

    double g_eps = kInf;
    if (eps > 1.0 + 1e-12) {
        const double num_eps = (1.0 - eps * eps) * (1.0 - tau) + 2.0 * std::sqrt((eps * eps - 1.0) * tau);
        const double den_eps = (eps - 1.0) * (tau + 1.0 + eps * (tau - 1.0));
        if (den_eps > 0.0 && num_eps > 0.0) g_eps = std::sqrt(num_eps / den_eps);
    }
    return GainBounds{g_chi, g_eps, std::min(g_chi, g_eps)};
}

bool correctable(const SqueezingParam& chi, const Channel& loss) {
    require_loss(loss, "correctable");
    if (!(chi.chi() > 0.0))
        throw std::domain_error("correctable: chi must be positive");
    if (is_entanglement_breaking(loss)) return false;
    return gain_bounds(chi, loss).g_max > 1.0 / chi.chi();
}

double theta(const EffectiveParams& eff, const TeleportGain& lam) {
    const double l = lam.lambda;
    if (std::abs(l - 1.0) < 1e-12)
        throw std::domain_error("theta: removable singularity at lambda = 1, use the simulated channel directly");
    if (!(l > 0.0))
        throw std::domain_error("theta: lambda must be positive");
    const double x = eff.chi_e.chi(), te = eff.tau_e, ee = eff.eps_e;
    const double x2 = x * x;
    const double num = ee * (te - 1.0) * (x2 - 1.0) + x2 * (te + l)
                       - 4.0 * x * std::sqrt(te * l) + te + l;
    return num / ((l - 1.0) * (x2 - 1.0));
}

Channel simulated_channel_from_effective(const EffectiveParams& eff, const TeleportGain& lam) {
    return simulated_channel(eff.resource_covariance(), lam);
}

namespace {

double lambda_max_from_cov(const TwoModeCovariance& rho) {
    // smaller root of (a-1) x^2 - 2 c x + (b+1) = 0, x = sqrt(lambda)
    const double a = rho.a, b = rho.b, c = rho.c1;
    if (!(a > 1.0)) return kInf;
    const double disc = c * c - (a - 1.0) * (b + 1.0);
    if (disc < 0.0) return kInf;  // simulated channel stays physical at every gain
    const double x = (c - std::sqrt(disc)) / (a - 1.0);
    if (!(x > 0.0)) return kInf;
    return x * x;
}

}  // namespace

double lambda_max(const EffectiveParams& eff) {
    return lambda_max_from_cov(eff.resource_covariance());
}

double lambda_max(const RawEffectiveParams& eff) {
    const double x = eff.chi_e;
    const double denom = 1.0 - x * x;
    const double a = (1.0 + x * x) / denom;
    const double b = eff.tau_e * a + (1.0 - eff.tau_e) * eff.eps_e;
    const double c = 2.0 * std::sqrt(eff.tau_e) * x / denom;
    return lambda_max_from_cov(balanced_covariance(a, b, c));
}

double pure_sim_tau(const SqueezingParam& chi_e, double tau_e, PureChannelKind kind) {
    const double x2 = chi_e.chi() * chi_e.chi();
    return kind == PureChannelKind::Loss ? tau_e * x2 : tau_e / x2;
}

LambdaOptimum optimize_lambda(const EffectiveParams& eff, const SqueezingParam& zeta) {
    const auto rho = eff.resource_covariance();
    // The output state is tmsv(zeta) with its second arm through the
    // simulated channel, so its EOF follows from the channel parameters alone.
    const auto eof_at = [&](double l) {
        const Channel sim = simulated_channel(rho, TeleportGain(l));
        if (is_entanglement_breaking(sim)) return 0.0;
        return eof_from_ro(ro_tmsv_through_channel(zeta.r(), sim));
    };

    auto window = entangling_gain_window(rho);
    const double cap = lambda_max(eff);
    if (!window.empty()) window.hi = std::min(window.hi, cap);
    if (window.empty()) {
        // No gain distributes entanglement; report the least-noisy gain
        // (largest margin to the entanglement-breaking line) with zero EOF.
        const double vertex = (rho.a > 1.0) ? (rho.c1 / (rho.a - 1.0)) * (rho.c1 / (rho.a - 1.0)) : 0.0;
        return LambdaOptimum{vertex, 0.0};
    }
    const double lo = std::max(window.lo, 1e-12);
    const auto best = grid_then_golden_maximize(eof_at, lo, window.hi, 128, 1e-10);
    return LambdaOptimum{best.x, best.value};
}

std::vector<CorrectionPoint> correction_curve(const Channel& loss, const SqueezingParam& chi,
                                              const SqueezingParam& zeta,
                                              const std::vector<NlaGain>& gains) {
    std::vector<CorrectionPoint> out;
    out.reserve(gains.size());
    for (const auto& g : gains) {
        const auto eff = effective_params(chi, loss, g);
        const Channel eff_channel = Channel::from_excess(eff.tau_e, eff.eps_e);
        const double resource_eof =
            eof_from_ro(ro_tmsv_through_channel(eff.chi_e.r(), eff_channel));
        const auto opt = optimize_lambda(eff, zeta);
        out.push_back(CorrectionPoint{g.g, resource_eof, opt.eof_star, opt.lambda_star});
    }
    return out;
}

}  // namespace gausslab
