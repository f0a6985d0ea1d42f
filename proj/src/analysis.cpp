#include "symquat/analysis.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace symquat {

QuatState analytic_lti_solution(double t, const AngularVelocity& omega, const QuatState& q0) {
    if (!omega.finite())
        throw std::invalid_argument("analytic_lti_solution: non-finite angular velocity");
    const TransitionMatrix g = analytic_transition(t, omega);
    return apply_step(g, q0);
}

AngularVelocity SpecialLtvProfile::omega(double t) const {
    const double s = std::sin(xi);
    return {-omega0 * (1.0 - std::cos(xi)), -omega0 * s * std::sin(omega0 * t),
            omega0 * s * std::cos(omega0 * t)};
}

QuatState SpecialLtvProfile::analytic_state(double t) const {
    const double h = 0.5 * xi;
    return {std::cos(h), 0.0, std::sin(h) * std::cos(omega0 * t),
            std::sin(h) * std::sin(omega0 * t)};
}

SpecialLtvProfile special_ltv_profile(double omega0, double xi) {
    if (omega0 == 0.0 || !std::isfinite(omega0) || !std::isfinite(xi))
        throw std::invalid_argument("special_ltv_profile: omega0 must be finite and non-zero");
    return {omega0, xi};
}

AngularVelocity DecayingLtvProfile::omega(double t) const {
    return {-omega0 * std::cos(xi * t) * std::exp(-omega0 * t), -omega0 * std::sin(omega0 * t),
            omega0 * std::cos(xi * t) * std::cos(omega0 * t)};
}

QuatState DecayingLtvProfile::initial_state() const {
    return {std::cos(0.5 * xi), 0.0, std::sin(0.5 * xi), 0.0};
}

double abs_error(const QuatState& numeric, const QuatState& reference) {
    const double d0 = numeric.e0 - reference.e0;
    const double d1 = numeric.e1 - reference.e1;
    const double d2 = numeric.e2 - reference.e2;
    const double d3 = numeric.e3 - reference.e3;
    return std::sqrt(d0 * d0 + d1 * d1 + d2 * d2 + d3 * d3);
}

ErrorReport max_error(const std::vector<QuatState>& numeric,
                      const std::vector<QuatState>& reference) {
    if (numeric.size() != reference.size())
        throw AlignmentError("max_error: trajectories have different lengths (" +
                             std::to_string(numeric.size()) + " vs " +
                             std::to_string(reference.size()) + ")");
    MaxErrorAccumulator acc;
    for (std::size_t i = 0; i < numeric.size(); ++i) acc.add(numeric[i], reference[i]);
    return acc.report();
}

namespace {

// Exact rotation exp((h/2) Omega(v)) applied to an extended-precision state.
detail::QuatLd rotate_exact(const AngularVelocity& v, long double h, const detail::QuatLd& q) {
    const long double g2 = static_cast<long double>(v.w1) * v.w1 +
                           static_cast<long double>(v.w2) * v.w2 +
                           static_cast<long double>(v.w3) * v.w3;
    if (g2 == 0.0L) return q;
    const long double g = sqrtl(g2);
    const long double half = 0.5L * g * h;
    const long double s_over_g = sinl(half) / g;
    return detail::apply_scalars(
        {cosl(half), s_over_g * v.w1, s_over_g * v.w2, s_over_g * v.w3}, q);
}

} // namespace

void reference_oracle(const std::function<AngularVelocity(double)>& omega, const QuatState& q0,
                      double t0, double tf, double grid_tau, int substeps,
                      const std::function<void(const TrajectorySample&)>& sink) {
    if (substeps < 1) throw std::invalid_argument("reference_oracle: substeps must be >= 1");
    if (!(grid_tau > 0.0) || !(tf > t0))
        throw std::invalid_argument("reference_oracle: need grid_tau > 0 and tf > t0");
    const long long n_grid = step_count(grid_tau, t0, tf);
    if (n_grid < 1) throw std::invalid_argument("reference_oracle: span shorter than one cell");

    const long double h = static_cast<long double>(grid_tau) / substeps;
    // Fourth-order commutator-free Magnus: two Gauss-node rate samples per
    // substep, combined into two exact rotation factors. Omega is linear in
    // omega, so each factor's generator is Omega of a weighted rate sum.
    const long double kRt3 = sqrtl(3.0L);
    const double c1 = static_cast<double>(0.5L - kRt3 / 6.0L);
    const double c2 = static_cast<double>(0.5L + kRt3 / 6.0L);
    const double f1 = static_cast<double>(0.25L + kRt3 / 6.0L);
    const double f2 = static_cast<double>(0.25L - kRt3 / 6.0L);
    const double hd = static_cast<double>(h);

    detail::QuatLd q = detail::to_ld(q0.normalized());
    sink(TrajectorySample{0, t0, detail::to_state(q)});
    long long m = 0; // global substep index
    for (long long j = 0; j < n_grid; ++j) {
        for (int i = 0; i < substeps; ++i, ++m) {
            const double t = static_cast<double>(static_cast<long double>(t0) + m * h);
            const AngularVelocity wa = omega(t + c1 * hd);
            const AngularVelocity wb = omega(t + c2 * hd);
            if (!wa.finite() || !wb.finite())
                throw PropagationError(m, "rate function returned non-finite omega");
            // Early-node-weighted factor acts first.
            q = rotate_exact(f1 * wa + f2 * wb, h, q);
            q = rotate_exact(f2 * wa + f1 * wb, h, q);
        }
        sink(TrajectorySample{j + 1, t0 + static_cast<double>(j + 1) * grid_tau,
                              detail::to_state(q)});
    }
}

std::vector<TrajectorySample> collect_reference_oracle(
    const std::function<AngularVelocity(double)>& omega, const QuatState& q0, double t0,
    double tf, double grid_tau, int substeps) {
    std::vector<TrajectorySample> out;
    out.reserve(static_cast<std::size_t>(step_count(grid_tau, t0, tf)) + 1);
    reference_oracle(omega, q0, t0, tf, grid_tau, substeps,
                     [&](const TrajectorySample& s) { out.push_back(s); });
    return out;
}

double convergence_order(const std::vector<std::pair<double, double>>& tau_emax) {
    std::vector<std::pair<double, double>> kept;
    for (const auto& [tau, e] : tau_emax) {
        if (!(tau > 0.0)) throw std::invalid_argument("convergence_order: tau must be > 0");
        if (e >= 1e-14) kept.emplace_back(tau, e);
    }
    if (kept.size() < 3)
        throw InsufficientData("convergence_order: fewer than 3 samples above the rounding floor");
    for (std::size_t i = 0; i < kept.size(); ++i)
        for (std::size_t j = i + 1; j < kept.size(); ++j)
            if (kept[i].first == kept[j].first)
                throw std::invalid_argument("convergence_order: tau values must be distinct");

    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (const auto& [tau, e] : kept) {
        const double x = std::log(tau);
        const double y = std::log(e);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double n = static_cast<double>(kept.size());
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

CostPrediction predict_cost(CostModel id, int ell, long long n) {
    if (ell < 1) throw std::invalid_argument("predict_cost: ell must be >= 1");
    if (n < 0) throw std::invalid_argument("predict_cost: n must be >= 0");
    const long long l = ell;
    CostPrediction m{id, ell, n, 0, 0};
    switch (id) {
        case CostModel::eta:
            m.mul = 3;
            m.add = 3;
            break;
        case CostModel::beta_alternative:
            m.mul = 6 * l - 1;
            m.add = 5 * l - 3;
            break;
        case CostModel::beta_parallel:
            m.mul = 11 * l - 6;
            m.add = (17 * l - 12 + l % 2) / 2;
            break;
        case CostModel::transition:
            m.mul = 6 * l + 29;
            m.add = 5 * l + 6;
            break;
        case CostModel::propagate_ltv:
            m.mul = 6 * l * n + 45 * n;
            m.add = 5 * l * n + 19 * n;
            break;
        case CostModel::propagate_lti:
            m.mul = 16 * n + 6 * l + 29;
            m.add = 13 * n + 5 * l + 6;
            break;
        default:
            throw std::invalid_argument("predict_cost: unknown cost model id");
    }
    return m;
}

namespace {

// Scalar that bills every multiply/divide/add/subtract to a shared tally.
struct Tally {
    unsigned long long mul = 0;
    unsigned long long add = 0;
};

struct Counted {
    double v;
    Tally* t;
    Counted operator*(Counted o) const { ++t->mul; return {v * o.v, t}; }
    Counted operator/(Counted o) const { ++t->mul; return {v / o.v, t}; }
    Counted operator+(Counted o) const { ++t->add; return {v + o.v, t}; }
    Counted operator-(Counted o) const { ++t->add; return {v - o.v, t}; }
    Counted operator-() const { return {-v, t}; } // sign flip, not arithmetic
};

Counted counted_eta(Counted ell, Counted k, Counted one, Counted two) {
    const Counted num = ell - k;
    const Counted den = (two * ell - k) * (k + one);
    return num / den;
}

} // namespace

CountedRun counted_propagate_ltv(const PropagationConfig& cfg,
                                 const std::function<AngularVelocity(double)>& omega) {
    Tally tally;
    auto c = [&](double x) { return Counted{x, &tally}; };
    const Counted one = c(1.0), two = c(2.0), half = c(0.5);
    const Counted ell = c(static_cast<double>(cfg.ell.ell()));
    const Counted tau = c(cfg.tau);
    const int s1 = cfg.ell.s1();
    const int s2 = cfg.ell.s2();
    const long long n = cfg.steps();

    Counted q[4] = {c(cfg.q0.e0), c(cfg.q0.e1), c(cfg.q0.e2), c(cfg.q0.e3)};
    Counted t = c(cfg.t0);
    std::vector<Counted> a(static_cast<std::size_t>(s1) + 1, c(0.0));
    std::vector<Counted> b(static_cast<std::size_t>(s2) + 1, c(0.0));

    for (long long k = 0; k < n; ++k) {
        const AngularVelocity w = omega(t.v);
        if (!w.finite()) throw PropagationError(k, "rate function returned non-finite omega");
        const Counted w1 = c(w.w1), w2 = c(w.w2), w3 = c(w.w3);

        const Counted g2 = w1 * w1 + w2 * w2 + w3 * w3;
        const Counted th = half * tau;
        const Counted cc = th * th * g2;

        // Alternating-chain coefficients, regenerated every step as the
        // per-step cost model assumes.
        b[0] = one;
        a[0] = half;
        for (int j = 0; j < s1; ++j) {
            b[static_cast<std::size_t>(j) + 1] =
                a[static_cast<std::size_t>(j)] * counted_eta(ell, c(2.0 * j + 1.0), one, two);
            a[static_cast<std::size_t>(j) + 1] =
                b[static_cast<std::size_t>(j) + 1] * counted_eta(ell, c(2.0 * j + 2.0), one, two);
        }
        if (cfg.ell.ell() % 2 == 0)
            b[static_cast<std::size_t>(s2)] =
                a[static_cast<std::size_t>(s1)] * counted_eta(ell, c(2.0 * s1 + 1.0), one, two);

        const Counted x = -cc;
        Counted num = a[static_cast<std::size_t>(s1)];
        for (int i = s1 - 1; i >= 0; --i) num = num * x + a[static_cast<std::size_t>(i)];
        Counted den = b[static_cast<std::size_t>(s2)];
        for (int i = s2 - 1; i >= 0; --i) den = den * x + b[static_cast<std::size_t>(i)];
        const Counted be = num / den;

        const Counted alpha = be * be * cc;
        const Counted tb = tau * be;
        const Counted v1 = tb * w1, v2 = tb * w2, v3 = tb * w3;
        const Counted dnum = one - alpha;
        const Counted dden = one + alpha;

        // (1 - alpha) I + tau beta Omega, diagonal added literally.
        Counted M[4][4] = {{c(0.0) + dnum, -v1, -v2, -v3},
                           {v1, c(0.0) + dnum, v3, -v2},
                           {v2, -v3, c(0.0) + dnum, v1},
                           {v3, v2, -v1, c(0.0) + dnum}};
        const Counted r = one / dden;
        Counted G[4][4];
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) G[i][j] = r * M[i][j];

        Counted y[4];
        for (int i = 0; i < 4; ++i)
            y[i] = G[i][0] * q[0] + G[i][1] * q[1] + G[i][2] * q[2] + G[i][3] * q[3];
        for (int i = 0; i < 4; ++i) q[i] = y[i];
        t = t + tau;
    }
    return {OpCounts{tally.mul, tally.add}, QuatState{q[0].v, q[1].v, q[2].v, q[3].v}};
}

} // namespace symquat
