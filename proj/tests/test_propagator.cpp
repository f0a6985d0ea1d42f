#include <doctest.h>

#include <array>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <new>
#include <thread>
#include <vector>

#include "symquat/analysis.hpp"
#include "symquat/propagator.hpp"

using namespace symquat;

// Global allocation counter for the constant-space contract test. Counts every
// operator-new in this binary; the test reads it around the propagation call.
namespace {
std::atomic<unsigned long long> g_allocs{0};
}

void* operator new(std::size_t n) {
    ++g_allocs;
    if (void* p = std::malloc(n)) return p;
    throw std::bad_alloc();
}
void* operator new[](std::size_t n) {
    ++g_allocs;
    if (void* p = std::malloc(n)) return p;
    throw std::bad_alloc();
}
void operator delete(void* p) noexcept { std::free(p); }
void operator delete[](void* p) noexcept { std::free(p); }
void operator delete(void* p, std::size_t) noexcept { std::free(p); }
void operator delete[](void* p, std::size_t) noexcept { std::free(p); }

namespace {

const double kPi = std::acos(-1.0);

const AngularVelocity kFigRate{kPi * std::sin(kPi / 8.0), -(kPi / 3.0) * std::cos(kPi / 8.0),
                               -2.0 * std::sin(kPi / 3.0)};

} // namespace

TEST_CASE("config validation") {
    const QuatState q0{1.0, 0.0, 0.0, 0.0};
    CHECK_THROWS_AS(PropagationConfig(OrderParam(1), 0.0, 0.0, 1.0, q0), std::invalid_argument);
    CHECK_THROWS_AS(PropagationConfig(OrderParam(1), -0.1, 0.0, 1.0, q0), std::invalid_argument);
    CHECK_THROWS_AS(PropagationConfig(OrderParam(1), 0.1, 1.0, 1.0, q0), std::invalid_argument);
    CHECK_THROWS_AS(PropagationConfig(OrderParam(1), 2.0, 0.0, 1.0, q0), std::invalid_argument);
    CHECK_THROWS_AS(PropagationConfig(OrderParam(1), 0.1, 0.0, 1.0, QuatState{0, 0, 0, 0}),
                    std::invalid_argument);

    // q0 is normalized on ingestion.
    const PropagationConfig cfg(OrderParam(1), 0.1, 0.0, 1.0, QuatState{2.0, 0.0, 0.0, 0.0});
    CHECK(cfg.q0.e0 == 1.0);
}

TEST_CASE("step_count snaps exact multiples and floors fractional spans") {
    CHECK(step_count(1e-3, 0.0, 2000.0) == 2000000);
    CHECK(step_count(0.1, 0.0, 1.0) == 10);
    CHECK(step_count(0.3, 0.0, 1.0) == 3);
    CHECK(step_count(0.007, 0.0, 2000.0) == 285714);
}

TEST_CASE("zero rate keeps every sample at q0") {
    const QuatState q0 = QuatState{0.5, 0.5, 0.5, 0.5};
    const PropagationConfig cfg(OrderParam(2), 0.125, 0.0, 10.0, q0);
    long long count = 0;
    propagate_lti(cfg, {0.0, 0.0, 0.0}, [&](const TrajectorySample& s) {
        CHECK(s.q.e0 == q0.e0);
        CHECK(s.q.e1 == q0.e1);
        CHECK(s.q.e2 == q0.e2);
        CHECK(s.q.e3 == q0.e3);
        ++count;
    });
    CHECK(count == 81); // n + 1 samples
}

TEST_CASE("samples carry the uniform grid times and n+1 entries") {
    const PropagationConfig cfg(OrderParam(1), 0.3, 1.0, 2.0, QuatState{1, 0, 0, 0});
    const auto traj = collect_lti(cfg, kFigRate);
    REQUIRE(traj.size() == 4); // floor(1/0.3) = 3 steps, no fractional step
    CHECK(traj[0].k == 0);
    CHECK(traj[0].t == 1.0);
    CHECK(traj[3].t == doctest::Approx(1.9).epsilon(1e-15));
    CHECK(traj[3].t < 2.0);
    // t is built as t0 + k*tau, not by repeated addition
    CHECK(traj[2].t == 1.0 + 2 * 0.3);
}

TEST_CASE("constant-rate LTV run is bitwise identical to LTI") {
    const PropagationConfig cfg(OrderParam(3), 0.01, 0.0, 50.0, QuatState{1, 0, 0, 0});
    const auto a = collect_lti(cfg, kFigRate);
    const auto b = collect_ltv(cfg, [](double) { return kFigRate; });
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(std::memcmp(&a[i].q, &b[i].q, sizeof(QuatState)) == 0);
        CHECK(a[i].t == b[i].t);
    }
}

TEST_CASE("norm is preserved without renormalization") {
    const PropagationConfig cfg(OrderParam(2), 0.01, 0.0, 1000.0, QuatState{1, 0, 0, 0});
    NormDriftMonitor drift;
    propagate_lti(cfg, kFigRate, [&](const TrajectorySample& s) { drift.add(s.q); });
    CHECK(drift.max_drift() <= 1e-12); // 1e5 steps
}

TEST_CASE("independent propagations run concurrently") {
    cached_coeffs(OrderParam(8)); // table is write-once; prime it
    std::vector<std::thread> workers;
    std::array<double, 4> drift{};
    for (int i = 0; i < 4; ++i) {
        workers.emplace_back([i, &drift] {
            const int ell = 1 + 2 * i;
            const PropagationConfig cfg(OrderParam(ell), 0.01, 0.0, 100.0,
                                        QuatState{1, 0, 0, 0});
            NormDriftMonitor m;
            propagate_ltv(cfg,
                          [](double t) {
                              return AngularVelocity{std::sin(t), std::cos(t), 0.5};
                          },
                          [&](const TrajectorySample& s) { m.add(s.q); });
            drift[static_cast<std::size_t>(i)] = m.max_drift();
        });
    }
    for (auto& w : workers) w.join();
    for (double d : drift) CHECK(d <= 1e-12);
}

TEST_CASE("LTI propagation is reversible through the transposed step") {
    const long long n = 1000;
    const PropagationConfig fwd(OrderParam(2), 0.05, 0.0, 0.05 * static_cast<double>(n),
                                QuatState{1, 0, 0, 0});
    QuatState end;
    propagate_lti(fwd, kFigRate, [&](const TrajectorySample& s) { end = s.q; });

    const TransitionMatrix back =
        inverse_transition(transition_matrix(OrderParam(2), 0.05, kFigRate));
    detail::QuatLd q = detail::to_ld(end);
    for (long long k = 0; k < n; ++k) q = detail::apply_step_ld(back, q);
    const QuatState q0 = detail::to_state(q);
    CHECK(abs_error(q0, QuatState{1, 0, 0, 0}) <= static_cast<double>(n) * 1e-14);
}

TEST_CASE("convergence order against the closed form") {
    const QuatState q0{1, 0, 0, 0};
    auto emax_for = [&](int ell, double tau) {
        const PropagationConfig cfg(OrderParam(ell), tau, 0.0, 20.0, q0);
        MaxErrorAccumulator acc;
        propagate_lti(cfg, kFigRate, [&](const TrajectorySample& s) {
            acc.add(s.q, analytic_lti_solution(s.t, kFigRate, q0));
        });
        return acc.report().e_max;
    };
    for (int ell : {1, 2}) {
        std::vector<std::pair<double, double>> pts;
        for (double tau : {0.2, 0.1, 0.05, 0.025}) pts.emplace_back(tau, emax_for(ell, tau));
        const double slope = convergence_order(pts);
        CHECK(std::abs(slope - 2.0 * ell) <= 0.25);
    }
}

TEST_CASE("high orders at small steps sit on the rounding floor") {
    const QuatState q0{1, 0, 0, 0};
    for (int ell : {4, 5}) {
        const PropagationConfig cfg(OrderParam(ell), 0.01, 0.0, 2000.0, q0);
        MaxErrorAccumulator acc;
        propagate_lti(cfg, kFigRate, [&](const TrajectorySample& s) {
            acc.add(s.q, analytic_lti_solution(s.t, kFigRate, q0));
        });
        CHECK(acc.report().e_max <= 1e-11);
    }
}

TEST_CASE("the rate is sampled at the left endpoint of each step") {
    // A rate that is non-finite only strictly inside (t_k, t_k + tau) must
    // never be observed; midpoint sampling would abort on it.
    const PropagationConfig cfg(OrderParam(1), 0.1, 0.0, 10.0, QuatState{1, 0, 0, 0});
    auto omega = [](double t) {
        const double frac = t - std::floor(t * 10.0) / 10.0;
        if (frac > 0.025 && frac < 0.075) return AngularVelocity{std::nan(""), 0.0, 0.0};
        return AngularVelocity{1.0, 0.0, 0.0};
    };
    long long count = 0;
    propagate_ltv(cfg, omega, [&](const TrajectorySample&) { ++count; });
    CHECK(count == 101);
}

TEST_CASE("non-finite rate aborts with the failing step index") {
    const PropagationConfig cfg(OrderParam(1), 0.1, 0.0, 10.0, QuatState{1, 0, 0, 0});
    auto omega = [](double t) {
        if (t >= 0.7 && t < 0.8) return AngularVelocity{std::nan(""), 0.0, 0.0};
        return AngularVelocity{1.0, 0.0, 0.0};
    };
    try {
        propagate_ltv(cfg, omega, [](const TrajectorySample&) {});
        FAIL("expected PropagationError");
    } catch (const PropagationError& e) {
        CHECK(e.step == 7);
    }
}

TEST_CASE("propagation allocates nothing after setup") {
    const PropagationConfig cfg(OrderParam(4), 0.01, 0.0, 100.0, QuatState{1, 0, 0, 0});
    cached_coeffs(cfg.ell); // prime the coefficient table
    double sum = 0.0;
    long long count = 0;

    const unsigned long long before = g_allocs.load();
    propagate_lti(cfg, kFigRate, [&](const TrajectorySample& s) {
        sum += s.q.e0;
        ++count;
    });
    const unsigned long long lti_allocs = g_allocs.load() - before;

    const unsigned long long before_ltv = g_allocs.load();
    propagate_ltv(cfg, [](double) { return kFigRate; }, [&](const TrajectorySample& s) {
        sum += s.q.e0;
        ++count;
    });
    const unsigned long long ltv_allocs = g_allocs.load() - before_ltv;

    CHECK(count == 2 * (10000 + 1));
    CHECK(std::isfinite(sum));
    CHECK(lti_allocs == 0);
    CHECK(ltv_allocs == 0);
}
