#include "symquat/core.hpp"

#include <stdexcept>

namespace symquat {

QuatState QuatState::normalized() const {
    const double n = norm();
    if (!(n > 0.0) || !std::isfinite(n))
        throw std::invalid_argument("QuatState::normalized: zero or non-finite quaternion");
    return {e0 / n, e1 / n, e2 / n, e3 / n};
}

OmegaMatrix build_omega(const AngularVelocity& w) {
    if (!w.finite()) throw std::invalid_argument("build_omega: non-finite angular velocity");
    OmegaMatrix o;
    Mat4& m = o.m;
    // Row 0
    m(0, 1) = -w.w1;
    m(0, 2) = -w.w2;
    m(0, 3) = -w.w3;
    // Mirrored entries are bitwise negations of the ones above.
    m(1, 0) = w.w1;
    m(2, 0) = w.w2;
    m(3, 0) = w.w3;
    // Inner 3x3 block
    m(1, 2) = w.w3;
    m(2, 1) = -w.w3;
    m(1, 3) = -w.w2;
    m(3, 1) = w.w2;
    m(2, 3) = w.w1;
    m(3, 2) = -w.w1;
    o.gamma = w.norm();
    return o;
}

Mat4 omega_hat(const OmegaMatrix& o) {
    if (!(o.gamma > 0.0))
        throw std::domain_error("omega_hat: |omega| == 0 has no unit rate matrix");
    Mat4 r;
    for (std::size_t i = 0; i < 16; ++i) r.m[i] = o.m.m[i] / o.gamma;
    return r;
}

const Mat4& symplectic_structure() {
    // (e0,e1,e2,e3) -> (-e1, e0, -e3, e2)
    static const Mat4 j = [] {
        Mat4 m;
        m(0, 1) = -1.0;
        m(1, 0) = 1.0;
        m(2, 3) = -1.0;
        m(3, 2) = 1.0;
        return m;
    }();
    return j;
}

} // namespace symquat
