#ifndef SYMQUAT_TRANSITION_HPP
#define SYMQUAT_TRANSITION_HPP

#include <array>

#include "symquat/core.hpp"
#include "symquat/pade.hpp"

namespace symquat {

/// Single-step transition map q[k] -> q[k+1]. Orthogonal and symplectic for
/// any real beta: G = [(1-alpha) I + tau beta Omega] / (1+alpha) is the
/// Cayley transform of (tau beta / 2) Omega, i.e. an exact rotation by
/// delta = 2 atan(beta gamma tau / 2) in the plane spanned by q and
/// Omega-hat q.
///
/// `g` holds correctly rounded double entries (what the structural residual
/// tests look at). `scal` holds the same four distinct scalars
/// {cos delta, v1, v2, v3} in extended precision; the propagators apply steps
/// through them so that the scale defect of the applied map stays well below
/// one double ulp and the quaternion norm does not drift over 10^6+ steps.
struct TransitionMatrix {
    Mat4 g;
    std::array<long double, 4> scal{1.0L, 0.0L, 0.0L, 0.0L};

    int ell = 0; ///< order parameter; 0 marks the exact analytic transition
    double tau = 0.0;
    double gamma = 0.0;
    double c = 0.0;
    double beta = 0.0;
    double alpha = 0.0;
    double delta = 0.0; ///< rotation angle, rad (diagnostics only)
};

/// Order-2ell step for rate omega held constant over [t, t+tau]
/// (Cayley path: no trig calls). |omega| = 0 returns exactly I with
/// delta = 0. tau may be any finite real; negative tau gives the inverse
/// step of the corresponding LTI flow.
TransitionMatrix transition_matrix(OrderParam p, double tau, const AngularVelocity& omega);
TransitionMatrix transition_matrix(OrderParam p, double tau, const AngularVelocity& omega,
                                   const PadeCoefficients& coeffs);

/// Exact single-step map of the constant-rate flow:
/// exp(tau Omega / 2) = cos(|w| tau / 2) I + sin(|w| tau / 2) Omega-hat.
TransitionMatrix analytic_transition(double tau, const AngularVelocity& omega);

/// The transpose, which is the inverse for any step produced here. For a
/// constant rate it equals the step built with -tau; with a time-varying
/// rate it is NOT the step built from the rate at an earlier sample time.
TransitionMatrix inverse_transition(const TransitionMatrix& g);

/// Apply one step. The extended-precision overload is the propagator path.
QuatState apply_step(const TransitionMatrix& g, const QuatState& q);

struct TransitionErrorTerms {
    double f1;    ///< cos(x/2) - (1-alpha)/(1+alpha)
    double f2;    ///< sin(x/2) - x beta/(1+alpha)
    double bound; ///< 2 (|f1| + |f2|), the step error estimate, O(x^{2ell+1})
};

/// Leading error of the order-2ell step against the exact rotation at
/// x = |omega| tau. Requires x >= 0.
TransitionErrorTerms transition_error_terms(OrderParam p, double x);

namespace detail {

using QuatLd = std::array<long double, 4>;

inline QuatLd to_ld(const QuatState& q) {
    return {static_cast<long double>(q.e0), static_cast<long double>(q.e1),
            static_cast<long double>(q.e2), static_cast<long double>(q.e3)};
}

inline QuatState to_state(const QuatLd& q) {
    return {static_cast<double>(q[0]), static_cast<double>(q[1]), static_cast<double>(q[2]),
            static_cast<double>(q[3])};
}

/// The right-multiplication structure shared by every map in this library:
/// y = c q + Omega(v) q for scalars {c, v1, v2, v3}.
inline QuatLd apply_scalars(const std::array<long double, 4>& s, const QuatLd& q) {
    const long double c = s[0], v1 = s[1], v2 = s[2], v3 = s[3];
    return {c * q[0] - v1 * q[1] - v2 * q[2] - v3 * q[3],
            v1 * q[0] + c * q[1] + v3 * q[2] - v2 * q[3],
            v2 * q[0] - v3 * q[1] + c * q[2] + v1 * q[3],
            v3 * q[0] + v2 * q[1] - v1 * q[2] + c * q[3]};
}

inline QuatLd apply_step_ld(const TransitionMatrix& g, const QuatLd& q) {
    return apply_scalars(g.scal, q);
}

/// Assemble the public matrix and applied scalars from extended-precision
/// {cos, v} values.
TransitionMatrix assemble_rotation(long double c, long double v1, long double v2, long double v3);

} // namespace detail

} // namespace symquat

#endif
