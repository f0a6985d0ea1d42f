#ifndef SYMQUAT_CORE_HPP
#define SYMQUAT_CORE_HPP

#include <cmath>

#include "symquat/mat4.hpp"

namespace symquat {

/// Body angular rate in rad/s.
struct AngularVelocity {
    double w1 = 0.0;
    double w2 = 0.0;
    double w3 = 0.0;

    double norm_sq() const { return w1 * w1 + w2 * w2 + w3 * w3; }
    double norm() const { return std::sqrt(norm_sq()); }
    bool finite() const { return std::isfinite(w1) && std::isfinite(w2) && std::isfinite(w3); }
};

inline AngularVelocity operator+(const AngularVelocity& a, const AngularVelocity& b) {
    return {a.w1 + b.w1, a.w2 + b.w2, a.w3 + b.w3};
}

inline AngularVelocity operator*(double s, const AngularVelocity& a) {
    return {s * a.w1, s * a.w2, s * a.w3};
}

/// Attitude quaternion, scalar first: q = [e0, e1, e2, e3]^T.
struct QuatState {
    double e0 = 1.0;
    double e1 = 0.0;
    double e2 = 0.0;
    double e3 = 0.0;

    double norm() const { return std::sqrt(e0 * e0 + e1 * e1 + e2 * e2 + e3 * e3); }
    bool finite() const {
        return std::isfinite(e0) && std::isfinite(e1) && std::isfinite(e2) && std::isfinite(e3);
    }
    Vec4 vec() const { return {{e0, e1, e2, e3}}; }
    static QuatState from_vec(const Vec4& v) { return {v[0], v[1], v[2], v[3]}; }

    QuatState normalized() const;
};

/// The 4x4 rate matrix of dq/dt = (1/2) Omega(omega) q, with its rate norm
/// cached. Skew-symmetric by construction: mirrored entries are copied with a
/// sign flip, never recomputed, and Omega^2 = -|omega|^2 I.
struct OmegaMatrix {
    Mat4 m;
    double gamma = 0.0; ///< |omega|, rad/s
};

/// Build Omega(omega). Throws std::invalid_argument on non-finite input.
OmegaMatrix build_omega(const AngularVelocity& omega);

/// Omega / |omega|, which squares to -I. Throws std::domain_error when
/// |omega| == 0 (callers must branch to the identity transition instead).
Mat4 omega_hat(const OmegaMatrix& omega);

/// The constant skew structure matrix J with J^2 = -I that commutes with
/// every Omega(omega): left multiplication by the unit imaginary quaternion
/// under the (e0,e1,e2,e3) coordinate order. G^T J G = J is the symplecticity
/// statement used by the invariant tests.
const Mat4& symplectic_structure();

} // namespace symquat

#endif
