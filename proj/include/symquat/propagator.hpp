#ifndef SYMQUAT_PROPAGATOR_HPP
#define SYMQUAT_PROPAGATOR_HPP

#include <cmath>
#include <utility>
#include <vector>

#include "symquat/errors.hpp"
#include "symquat/transition.hpp"

namespace symquat {

struct TrajectorySample {
    long long k = 0;
    double t = 0.0;
    QuatState q;
};

/// Number of full steps on [t0, tf]: floor((tf - t0) / tau), with a relative
/// snap so that spans that are exact multiples of tau in real arithmetic do
/// not lose their last step to division rounding. The window (1e-12 relative)
/// is orders above the few-ulp division error and orders below any span a
/// caller could intend as fractional.
inline long long step_count(double tau, double t0, double tf) {
    const double r = (tf - t0) / tau;
    const double rounded = std::round(r);
    if (std::abs(r - rounded) <= 1e-12 * std::max(1.0, std::abs(r)))
        return static_cast<long long>(rounded);
    return static_cast<long long>(std::floor(r));
}

/// Validated propagation setup. q0 is normalized on ingestion. If
/// (tf - t0) is not an integer multiple of tau, propagation stops at
/// t0 + n tau; no fractional final step is taken.
struct PropagationConfig {
    PropagationConfig(OrderParam ell, double tau, double t0, double tf, const QuatState& q0)
        : ell(ell), tau(tau), t0(t0), tf(tf), q0(q0.normalized()) {
        if (!(tau > 0.0) || !std::isfinite(tau))
            throw std::invalid_argument("PropagationConfig: tau must be finite and > 0");
        if (!(tf > t0) || !std::isfinite(t0) || !std::isfinite(tf))
            throw std::invalid_argument("PropagationConfig: need finite tf > t0");
        if (steps() < 1)
            throw std::invalid_argument("PropagationConfig: span shorter than one step");
    }

    long long steps() const { return step_count(tau, t0, tf); }
    double time_at(long long k) const { return t0 + static_cast<double>(k) * tau; }

    OrderParam ell;
    double tau;
    double t0;
    double tf;
    QuatState q0;
};

/// Constant-rate propagation (the transition matrix is computed once).
/// Emits n+1 samples, indices 0..n, through the sink; memory use does not
/// depend on n. The quaternion is never renormalized.
template <typename Sink>
void propagate_lti(const PropagationConfig& cfg, const AngularVelocity& omega, Sink&& sink) {
    if (!omega.finite()) throw std::invalid_argument("propagate_lti: non-finite angular velocity");
    const long long n = cfg.steps();
    const TransitionMatrix g = transition_matrix(cfg.ell, cfg.tau, omega);
    detail::QuatLd q = detail::to_ld(cfg.q0);
    sink(TrajectorySample{0, cfg.t0, cfg.q0});
    for (long long k = 0; k < n; ++k) {
        q = detail::apply_step_ld(g, q);
        sink(TrajectorySample{k + 1, cfg.time_at(k + 1), detail::to_state(q)});
    }
}

/// Time-varying propagation: per step the rate is sampled at the left
/// endpoint omega(t[k]) and one transition matrix is built locally for that
/// step. Aborts with PropagationError (carrying the step index) if the rate
/// function returns a non-finite value.
template <typename OmegaFn, typename Sink>
void propagate_ltv(const PropagationConfig& cfg, OmegaFn&& omega, Sink&& sink) {
    const long long n = cfg.steps();
    const PadeCoefficients& coeffs = cached_coeffs(cfg.ell);
    detail::QuatLd q = detail::to_ld(cfg.q0);
    sink(TrajectorySample{0, cfg.t0, cfg.q0});
    for (long long k = 0; k < n; ++k) {
        const AngularVelocity w = omega(cfg.time_at(k));
        if (!w.finite()) throw PropagationError(k, "rate function returned non-finite omega");
        const TransitionMatrix g = transition_matrix(cfg.ell, cfg.tau, w, coeffs);
        q = detail::apply_step_ld(g, q);
        sink(TrajectorySample{k + 1, cfg.time_at(k + 1), detail::to_state(q)});
    }
}

/// Collectors for analysis runs that want the whole trajectory in memory.
inline std::vector<TrajectorySample> collect_lti(const PropagationConfig& cfg,
                                                 const AngularVelocity& omega) {
    std::vector<TrajectorySample> out;
    out.reserve(static_cast<std::size_t>(cfg.steps()) + 1);
    propagate_lti(cfg, omega, [&](const TrajectorySample& s) { out.push_back(s); });
    return out;
}

template <typename OmegaFn>
std::vector<TrajectorySample> collect_ltv(const PropagationConfig& cfg, OmegaFn&& omega) {
    std::vector<TrajectorySample> out;
    out.reserve(static_cast<std::size_t>(cfg.steps()) + 1);
    propagate_ltv(cfg, std::forward<OmegaFn>(omega),
                  [&](const TrajectorySample& s) { out.push_back(s); });
    return out;
}

} // namespace symquat

#endif
