#ifndef SYMQUAT_ERRORS_HPP
#define SYMQUAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace symquat {

/// Rational form of beta(ell, c) evaluated at (or numerically on top of) a
/// pole of its denominator polynomial.
struct SingularDenominator : std::domain_error {
    SingularDenominator(int ell, double c)
        : std::domain_error("beta(" + std::to_string(ell) + ", " + std::to_string(c) +
                            "): denominator polynomial is singular at this c"),
          ell(ell), c(c) {}
    int ell;
    double c;
};

/// Propagation stopped because the rate function returned a non-finite value.
struct PropagationError : std::runtime_error {
    PropagationError(long long step, const std::string& what)
        : std::runtime_error("propagation aborted at step " + std::to_string(step) + ": " + what),
          step(step) {}
    long long step;
};

/// Two streams that must be index-aligned had different lengths.
struct AlignmentError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Too few usable samples left after filtering to fit anything.
struct InsufficientData : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Bad scenario specification (CLI / config level).
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

} // namespace symquat

#endif
