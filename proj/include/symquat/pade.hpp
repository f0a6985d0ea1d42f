#ifndef SYMQUAT_PADE_HPP
#define SYMQUAT_PADE_HPP

#include <span>
#include <vector>

#include "symquat/errors.hpp"

namespace symquat {

/// Largest supported order parameter. Orders beyond the studied range have no
/// tested value; the eta products underflow gracefully but are refused.
inline constexpr int kMaxOrder = 32;

/// Accuracy order parameter ell (the scheme is accurate to order 2*ell).
class OrderParam {
  public:
    explicit OrderParam(int ell);

    int ell() const { return ell_; }
    /// Degree of the odd-power (numerator) split polynomial.
    int s1() const { return (ell_ - 1) / 2; }
    /// Degree of the even-power (denominator) split polynomial.
    int s2() const { return ell_ / 2; }

  private:
    int ell_;
};

/// Split-polynomial coefficients of the diagonal Pade numerator
/// P_ell(x) = d(s2, x^2) + x * n(s1, x^2):
///   a[j] multiplies x^j in n (odd powers of P), size s1+1, a[0] = 1/2
///   b[j] multiplies x^j in d (even powers of P), size s2+1, b[0] = 1
struct PadeCoefficients {
    std::vector<double> a;
    std::vector<double> b;
};

/// eta_k^ell = (ell - k) / ((2 ell - k) (k + 1)), the factor linking
/// consecutive Pade coefficients. Requires 0 <= k <= ell - 1.
double eta(int ell, int k);

/// Evaluate sum c[i] x^i with Horner's rule (s multiplies, s adds).
/// Throws std::invalid_argument on an empty coefficient array.
double horner(std::span<const double> coeffs, double x);

/// Two-lane recurrence: a and b advance independently from a[0], b[0].
PadeCoefficients gen_coeffs_parallel(OrderParam p);

/// Single alternating chain b0 -> a0 -> b1 -> a1 -> ..., with a tail step
/// b[s2] = a[s1] * eta(ell, 2 s1 + 1) exactly when ell is even. Cheaper than
/// the parallel lane (each eta is used once); this is the default generator.
PadeCoefficients gen_coeffs_alternative(OrderParam p);

/// Coefficients for ell computed once per process (alternative scheme),
/// write-once and safe for concurrent readers.
const PadeCoefficients& cached_coeffs(OrderParam p);

struct BetaValue {
    double value = 0.0;
    int ell = 1;
    double c = 0.0;
    /// True when c lies beyond the tabulated Taylor convergence bound for
    /// this ell (accuracy degrades there; the value is still returned).
    bool beyond_convergence_domain = false;
};

/// The Cayley gain beta(ell, c) = n(s1, -c) / d(s2, -c) for c = |w|^2 tau^2/4.
/// Throws SingularDenominator at (numerically) a pole of the rational form,
/// e.g. c -> 12 for ell = 2.
BetaValue beta(OrderParam p, double c);
BetaValue beta(OrderParam p, const PadeCoefficients& coeffs, double c);

/// Taylor convergence bound of beta(ell, .) in c for 1 <= ell <= 6
/// (+infinity for ell = 1). Returns +infinity for ell > 6 where no bound is
/// tabulated; no warning flag is raised there.
double convergence_domain_bound(int ell);

namespace detail {

/// Extended-precision Horner used by the transition builder.
long double horner_ld(std::span<const double> coeffs, long double x);

/// beta in extended precision with the pole guard. The guard is relative:
/// |d(-c)| < 1e-12 * max(1, d evaluated with all-positive terms).
long double beta_ld(int ell, const PadeCoefficients& coeffs, double c);

} // namespace detail

} // namespace symquat

#endif
