#ifndef SYMQUAT_ANALYSIS_HPP
#define SYMQUAT_ANALYSIS_HPP

#include <functional>
#include <utility>
#include <vector>

#include "symquat/propagator.hpp"

namespace symquat {

/// Exact constant-rate solution q(t) = [cos(|w|t/2) I + sin(|w|t/2) W-hat] q0.
QuatState analytic_lti_solution(double t, const AngularVelocity& omega, const QuatState& q0);

/// A time-varying rate with a closed-form trajectory:
///   omega(t) = [-w0 (1 - cos xi), -w0 sin xi sin(w0 t), w0 sin xi cos(w0 t)]
///   q(t)     = [cos(xi/2), 0, sin(xi/2) cos(w0 t), sin(xi/2) sin(w0 t)]
/// The pair satisfies dq/dt = (1/2) Omega(omega(t)) q for every t.
struct SpecialLtvProfile {
    double omega0;
    double xi;

    AngularVelocity omega(double t) const;
    QuatState analytic_state(double t) const;
};

/// Requires omega0 != 0.
SpecialLtvProfile special_ltv_profile(double omega0, double xi);

/// A decaying/oscillating rate with no closed-form trajectory; reference
/// values come from the high-accuracy oracle:
///   omega(t) = [-w0 cos(xi t) exp(-w0 t), -w0 sin(w0 t), w0 cos(xi t) cos(w0 t)]
struct DecayingLtvProfile {
    double omega0;
    double xi;

    AngularVelocity omega(double t) const;
    QuatState initial_state() const; ///< [cos(xi/2), 0, sin(xi/2), 0]
};

/// Euclidean distance of two state vectors. Antipodal quaternions are NOT
/// identified: abs_error(q, -q) == 2.
double abs_error(const QuatState& numeric, const QuatState& reference);

struct ErrorReport {
    double e_max = 0.0;
    long long k_argmax = 0;
    long long count = 0;          ///< number of pairs consumed
    long long near_antipodal = 0; ///< samples with |numeric + reference| < 0.5 (diagnostic)
    int ell = 0;                  ///< config echo, optional
    double tau = 0.0;
    double t0 = 0.0;
    double tf = 0.0;
};

/// Single-pass running maximum of abs_error over aligned sample pairs. Also
/// counts near-antipodal pairs, since sign-flipped quaternions score as
/// distance ~2 here even though they encode the same rotation.
class MaxErrorAccumulator {
  public:
    void add(const QuatState& numeric, const QuatState& reference) {
        const double e = abs_error(numeric, reference);
        if (e > report_.e_max) {
            report_.e_max = e;
            report_.k_argmax = report_.count;
        }
        const double s0 = numeric.e0 + reference.e0, s1 = numeric.e1 + reference.e1;
        const double s2 = numeric.e2 + reference.e2, s3 = numeric.e3 + reference.e3;
        if (s0 * s0 + s1 * s1 + s2 * s2 + s3 * s3 < 0.25) ++report_.near_antipodal;
        ++report_.count;
    }
    ErrorReport report() const { return report_; }

  private:
    ErrorReport report_;
};

/// Diagnostic companion to the no-renormalization policy: running maximum of
/// | |q| - 1 | over emitted samples.
class NormDriftMonitor {
  public:
    void add(const QuatState& q) {
        const double d = std::abs(q.norm() - 1.0);
        if (d > drift_) drift_ = d;
    }
    double max_drift() const { return drift_; }

  private:
    double drift_ = 0.0;
};

/// Maximum error over two aligned trajectories of equal length.
/// Throws AlignmentError on a length mismatch.
ErrorReport max_error(const std::vector<QuatState>& numeric,
                      const std::vector<QuatState>& reference);

/// High-accuracy reference trajectory on the grid t0 + j*grid_tau, replacing
/// an external simulation tool. Each grid cell is integrated with `substeps`
/// fourth-order commutator-free Magnus substeps whose factors are exact
/// rotations (two rate samples per substep at the Gauss nodes), with
/// extended-precision state. For a constant rate the factors collapse to the
/// exact flow. Error budget: <= 1e-12 per emitted sample for |omega| <= 4 pi
/// and grid_tau/substeps <= 1e-3 over spans up to ~10^3 s; validated against
/// both closed-form solutions before use on profiles without one.
void reference_oracle(const std::function<AngularVelocity(double)>& omega, const QuatState& q0,
                      double t0, double tf, double grid_tau, int substeps,
                      const std::function<void(const TrajectorySample&)>& sink);

std::vector<TrajectorySample> collect_reference_oracle(
    const std::function<AngularVelocity(double)>& omega, const QuatState& q0, double t0,
    double tf, double grid_tau, int substeps = 256);

/// Least-squares slope of log E_max against log tau. Samples with
/// E_max < 1e-14 are dropped as rounding-floor contaminated; fewer than
/// three surviving samples throws InsufficientData.
double convergence_order(const std::vector<std::pair<double, double>>& tau_emax);

// --- operation-count cost model -------------------------------------------

/// Algorithms with tabulated (multiplications, additions) cost forms.
enum class CostModel {
    eta,              ///< one eta evaluation: [3, 3]
    beta_alternative, ///< alternating-chain beta generator: [6l-1, 5l-3]
    beta_parallel,    ///< two-lane beta generator: [11l-6, (17l-12+l%2)/2]
    transition,       ///< one time-varying step matrix: [6l+29, 5l+6]
    propagate_ltv,    ///< n time-varying steps: [6ln+45n, 5ln+19n]
    propagate_lti,    ///< n constant-rate steps: [16n+6l+29, 13n+5l+6]
};

struct CostPrediction {
    CostModel id;
    int ell = 0;
    long long n = 0;
    long long mul = 0;
    long long add = 0;
};

/// Evaluate the closed-form cost of `id` at (ell, n). n is ignored for the
/// per-call models. Throws std::invalid_argument for out-of-range ell/n.
CostPrediction predict_cost(CostModel id, int ell, long long n = 0);

struct OpCounts {
    unsigned long long mul = 0;
    unsigned long long add = 0;
};

/// Run the time-varying propagator as a literal per-step kernel (coefficients
/// regenerated every step through the alternating chain, plain double
/// arithmetic) with every multiply/add of the kernel counted; divisions are
/// billed as multiplications. Rate-function evaluation and index bookkeeping
/// are not counted. Returns the counters together with the final state so
/// the arithmetic cannot be optimized away.
struct CountedRun {
    OpCounts ops;
    QuatState final_state;
};
CountedRun counted_propagate_ltv(const PropagationConfig& cfg,
                                 const std::function<AngularVelocity(double)>& omega);

} // namespace symquat

#endif
