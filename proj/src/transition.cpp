#include "symquat/transition.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace symquat {

namespace detail {

TransitionMatrix assemble_rotation(long double c, long double v1, long double v2, long double v3) {
    TransitionMatrix t;
    t.scal = {c, v1, v2, v3};
    const double cd = static_cast<double>(c);
    const double f1 = static_cast<double>(v1);
    const double f2 = static_cast<double>(v2);
    const double f3 = static_cast<double>(v3);
    Mat4& g = t.g;
    g(0, 0) = cd; g(0, 1) = -f1; g(0, 2) = -f2; g(0, 3) = -f3;
    g(1, 0) = f1; g(1, 1) = cd;  g(1, 2) = f3;  g(1, 3) = -f2;
    g(2, 0) = f2; g(2, 1) = -f3; g(2, 2) = cd;  g(2, 3) = f1;
    g(3, 0) = f3; g(3, 1) = f2;  g(3, 2) = -f1; g(3, 3) = cd;
    return t;
}

} // namespace detail

TransitionMatrix transition_matrix(OrderParam p, double tau, const AngularVelocity& omega,
                                   const PadeCoefficients& coeffs) {
    if (!std::isfinite(tau)) throw std::invalid_argument("transition_matrix: non-finite tau");
    if (!omega.finite())
        throw std::invalid_argument("transition_matrix: non-finite angular velocity");

    const long double g2 = static_cast<long double>(omega.w1) * omega.w1 +
                           static_cast<long double>(omega.w2) * omega.w2 +
                           static_cast<long double>(omega.w3) * omega.w3;
    if (g2 == 0.0L) {
        TransitionMatrix t = detail::assemble_rotation(1.0L, 0.0L, 0.0L, 0.0L);
        t.ell = p.ell();
        t.tau = tau;
        t.beta = 0.5;
        return t;
    }

    const long double half_tau = 0.5L * static_cast<long double>(tau);
    const long double c = half_tau * half_tau * g2;
    const long double be = detail::beta_ld(p.ell(), coeffs, static_cast<double>(c));
    const long double al = c * be * be;
    const long double r = 1.0L / (1.0L + al);
    const long double cosd = (1.0L - al) * r;
    const long double fv = static_cast<long double>(tau) * be * r;

    TransitionMatrix t = detail::assemble_rotation(cosd, fv * omega.w1, fv * omega.w2,
                                                   fv * omega.w3);
    t.ell = p.ell();
    t.tau = tau;
    t.gamma = static_cast<double>(sqrtl(g2));
    t.c = static_cast<double>(c);
    t.beta = static_cast<double>(be);
    t.alpha = static_cast<double>(al);
    t.delta = static_cast<double>(2.0L * atanl(be * sqrtl(g2) * half_tau));
    return t;
}

TransitionMatrix transition_matrix(OrderParam p, double tau, const AngularVelocity& omega) {
    return transition_matrix(p, tau, omega, cached_coeffs(p));
}

TransitionMatrix analytic_transition(double tau, const AngularVelocity& omega) {
    if (!std::isfinite(tau)) throw std::invalid_argument("analytic_transition: non-finite tau");
    if (!omega.finite())
        throw std::invalid_argument("analytic_transition: non-finite angular velocity");

    const long double g2 = static_cast<long double>(omega.w1) * omega.w1 +
                           static_cast<long double>(omega.w2) * omega.w2 +
                           static_cast<long double>(omega.w3) * omega.w3;
    if (g2 == 0.0L) {
        TransitionMatrix t = detail::assemble_rotation(1.0L, 0.0L, 0.0L, 0.0L);
        t.tau = tau;
        t.beta = std::numeric_limits<double>::quiet_NaN();
        t.alpha = std::numeric_limits<double>::quiet_NaN();
        return t;
    }
    const long double g = sqrtl(g2);
    const long double half = g * static_cast<long double>(tau) * 0.5L;
    const long double s_over_g = sinl(half) / g;

    TransitionMatrix t = detail::assemble_rotation(cosl(half), s_over_g * omega.w1,
                                                   s_over_g * omega.w2, s_over_g * omega.w3);
    t.ell = 0;
    t.tau = tau;
    t.gamma = static_cast<double>(g);
    t.c = static_cast<double>(0.25L * g2 * tau * tau);
    t.beta = std::numeric_limits<double>::quiet_NaN();
    t.alpha = std::numeric_limits<double>::quiet_NaN();
    t.delta = static_cast<double>(half);
    return t;
}

TransitionMatrix inverse_transition(const TransitionMatrix& g) {
    TransitionMatrix t = g;
    t.g = transpose(g.g);
    t.scal = {g.scal[0], -g.scal[1], -g.scal[2], -g.scal[3]};
    t.tau = -g.tau;
    t.delta = -g.delta;
    return t;
}

QuatState apply_step(const TransitionMatrix& g, const QuatState& q) {
    return detail::to_state(detail::apply_step_ld(g, detail::to_ld(q)));
}

TransitionErrorTerms transition_error_terms(OrderParam p, double x) {
    if (!(x >= 0.0) || !std::isfinite(x))
        throw std::invalid_argument("transition_error_terms: x must be finite and >= 0");
    const long double xl = x;
    const long double c = 0.25L * xl * xl;
    const long double be = detail::beta_ld(p.ell(), cached_coeffs(p), static_cast<double>(c));
    const long double al = c * be * be;
    const long double r = 1.0L / (1.0L + al);
    const long double f1 = cosl(0.5L * xl) - (1.0L - al) * r;
    const long double f2 = sinl(0.5L * xl) - xl * be * r;
    TransitionErrorTerms e;
    e.f1 = static_cast<double>(f1);
    e.f2 = static_cast<double>(f2);
    e.bound = static_cast<double>(2.0L * (fabsl(f1) + fabsl(f2)));
    return e;
}

} // namespace symquat
