#ifndef SYMQUAT_MAT4_HPP
#define SYMQUAT_MAT4_HPP

#include <array>
#include <cmath>

namespace symquat {

// Fixed-size 4-vector / 4x4 matrix, row major. This is all the linear algebra
// the quaternion kinematics needs; keeping it local makes the arithmetic
// kernels easy to instrument and keeps the dependency surface empty.

struct Vec4 {
    std::array<double, 4> v{};

    double& operator[](int i) { return v[static_cast<std::size_t>(i)]; }
    const double& operator[](int i) const { return v[static_cast<std::size_t>(i)]; }

    double norm() const {
        return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2] + v[3] * v[3]);
    }
};

inline Vec4 operator-(const Vec4& a, const Vec4& b) {
    return {{a.v[0] - b.v[0], a.v[1] - b.v[1], a.v[2] - b.v[2], a.v[3] - b.v[3]}};
}

struct Mat4 {
    std::array<double, 16> m{};

    double& operator()(int i, int j) { return m[static_cast<std::size_t>(4 * i + j)]; }
    const double& operator()(int i, int j) const { return m[static_cast<std::size_t>(4 * i + j)]; }

    static Mat4 identity() {
        Mat4 r;
        r(0, 0) = r(1, 1) = r(2, 2) = r(3, 3) = 1.0;
        return r;
    }

    static Mat4 zero() { return Mat4{}; }
};

inline Mat4 operator*(const Mat4& a, const Mat4& b) {
    Mat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            double s = 0.0;
            for (int k = 0; k < 4; ++k) s += a(i, k) * b(k, j);
            r(i, j) = s;
        }
    return r;
}

inline Vec4 operator*(const Mat4& a, const Vec4& x) {
    Vec4 y;
    for (int i = 0; i < 4; ++i) {
        double s = 0.0;
        for (int j = 0; j < 4; ++j) s += a(i, j) * x[j];
        y[i] = s;
    }
    return y;
}

inline Mat4 operator+(const Mat4& a, const Mat4& b) {
    Mat4 r;
    for (std::size_t i = 0; i < 16; ++i) r.m[i] = a.m[i] + b.m[i];
    return r;
}

inline Mat4 operator-(const Mat4& a, const Mat4& b) {
    Mat4 r;
    for (std::size_t i = 0; i < 16; ++i) r.m[i] = a.m[i] - b.m[i];
    return r;
}

inline Mat4 operator*(double s, const Mat4& a) {
    Mat4 r;
    for (std::size_t i = 0; i < 16; ++i) r.m[i] = s * a.m[i];
    return r;
}

inline Mat4 transpose(const Mat4& a) {
    Mat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r(i, j) = a(j, i);
    return r;
}

inline double frobenius_norm(const Mat4& a) {
    double s = 0.0;
    for (double x : a.m) s += x * x;
    return std::sqrt(s);
}

} // namespace symquat

#endif
