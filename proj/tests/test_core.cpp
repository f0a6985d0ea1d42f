#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "symquat/core.hpp"

using namespace symquat;

namespace {

const double kPi = std::acos(-1.0);

AngularVelocity random_rate(std::mt19937_64& rng, double max_norm) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    AngularVelocity w{u(rng), u(rng), u(rng)};
    const double n = w.norm();
    std::uniform_real_distribution<double> ug(1e-3, max_norm);
    return (ug(rng) / n) * w;
}

} // namespace

TEST_CASE("build_omega zero rate gives the zero matrix") {
    const OmegaMatrix o = build_omega({0.0, 0.0, 0.0});
    CHECK(o.gamma == 0.0);
    for (double x : o.m.m) CHECK(x == 0.0);
}

TEST_CASE("build_omega matches the displayed layout for omega = (1,0,0)") {
    const OmegaMatrix o = build_omega({1.0, 0.0, 0.0});
    const double expected[16] = {0, -1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, -1, 0};
    for (int i = 0; i < 16; ++i) CHECK(o.m.m[static_cast<std::size_t>(i)] == expected[i]);
    CHECK(o.gamma == 1.0);
}

TEST_CASE("omega squared is minus gamma^2 I") {
    std::mt19937_64 rng(7);
    // |omega| = 2 first, then random rates up to 4 pi.
    AngularVelocity w2 = random_rate(rng, 4.0);
    w2 = (2.0 / w2.norm()) * w2;
    for (int rep = 0; rep < 50; ++rep) {
        const AngularVelocity w = rep == 0 ? w2 : random_rate(rng, 4.0 * kPi);
        const OmegaMatrix o = build_omega(w);
        const Mat4 sq = o.m * o.m;
        const double g2 = o.gamma * o.gamma;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                const double want = i == j ? -g2 : 0.0;
                CHECK(std::abs(sq(i, j) - want) <= 1e-13 * g2);
            }
    }
}

TEST_CASE("build_omega skew symmetry is exact") {
    std::mt19937_64 rng(11);
    for (int rep = 0; rep < 100; ++rep) {
        const OmegaMatrix o = build_omega(random_rate(rng, 4.0 * kPi));
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) CHECK(o.m(i, j) == -o.m(j, i));
    }
}

TEST_CASE("omega is linear in the rate for representable scalars") {
    const AngularVelocity a{0.5, -0.25, 2.0};
    const AngularVelocity b{1.0, 0.125, -4.0};
    const OmegaMatrix oa = build_omega(a);
    const OmegaMatrix ob = build_omega(b);
    const OmegaMatrix sum = build_omega(0.5 * a + 2.0 * b);
    for (int i = 0; i < 16; ++i) {
        const std::size_t k = static_cast<std::size_t>(i);
        CHECK(sum.m.m[k] == 0.5 * oa.m.m[k] + 2.0 * ob.m.m[k]);
    }
}

TEST_CASE("build_omega rejects non-finite input") {
    CHECK_THROWS_AS(build_omega({std::nan(""), 0.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(build_omega({0.0, std::numeric_limits<double>::infinity(), 0.0}),
                    std::invalid_argument);
}

TEST_CASE("omega_hat") {
    SUBCASE("scaling: hat of (2,0,0) equals omega of (1,0,0)") {
        const Mat4 h = omega_hat(build_omega({2.0, 0.0, 0.0}));
        const Mat4 ref = build_omega({1.0, 0.0, 0.0}).m;
        for (std::size_t i = 0; i < 16; ++i) CHECK(h.m[i] == ref.m[i]);
    }
    SUBCASE("hat squared is -I") {
        const Mat4 h = omega_hat(build_omega({1.0, 1.0, 1.0}));
        const Mat4 sq = h * h;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                CHECK(std::abs(sq(i, j) - (i == j ? -1.0 : 0.0)) <= 1e-13);
    }
    SUBCASE("zero rate is rejected") {
        CHECK_THROWS_AS(omega_hat(build_omega({0.0, 0.0, 0.0})), std::domain_error);
    }
}

TEST_CASE("symplectic structure: skew, squares to -I, commutes with every omega") {
    const Mat4& j = symplectic_structure();
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) CHECK(j(r, c) == -j(c, r));
    const Mat4 sq = j * j;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) CHECK(sq(r, c) == (r == c ? -1.0 : 0.0));

    // J entries are 0/+-1, so J*Omega and Omega*J carry the very same
    // products and must agree bitwise, well inside the 1e-15*|w| budget.
    std::mt19937_64 rng(13);
    for (int rep = 0; rep < 100; ++rep) {
        const OmegaMatrix o = build_omega(random_rate(rng, 4.0 * kPi));
        const Mat4 jo = j * o.m;
        const Mat4 oj = o.m * j;
        for (std::size_t i = 0; i < 16; ++i) CHECK(jo.m[i] == oj.m[i]);
    }
}

TEST_CASE("quaternion normalization") {
    const QuatState q{2.0, 0.0, 0.0, 0.0};
    const QuatState n = q.normalized();
    CHECK(n.e0 == 1.0);
    CHECK(n.norm() == 1.0);
    CHECK_THROWS_AS((QuatState{0.0, 0.0, 0.0, 0.0}.normalized()), std::invalid_argument);
}
