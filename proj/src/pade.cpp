#include "symquat/pade.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <string>

namespace symquat {

OrderParam::OrderParam(int ell) : ell_(ell) {
    if (ell < 1 || ell > kMaxOrder)
        throw std::invalid_argument("OrderParam: ell must be in [1, " +
                                    std::to_string(kMaxOrder) + "], got " + std::to_string(ell));
}

double eta(int ell, int k) {
    if (ell < 1) throw std::invalid_argument("eta: ell must be positive");
    if (k < 0 || k > ell - 1)
        throw std::invalid_argument("eta: k must be in [0, ell-1], got k=" + std::to_string(k) +
                                    " for ell=" + std::to_string(ell));
    return static_cast<double>(ell - k) /
           (static_cast<double>(2 * ell - k) * static_cast<double>(k + 1));
}

double horner(std::span<const double> coeffs, double x) {
    if (coeffs.empty()) throw std::invalid_argument("horner: empty coefficient array");
    double t = coeffs.back();
    for (std::size_t i = coeffs.size() - 1; i-- > 0;) t = t * x + coeffs[i];
    return t;
}

PadeCoefficients gen_coeffs_parallel(OrderParam p) {
    const int ell = p.ell();
    PadeCoefficients c;
    c.a.resize(static_cast<std::size_t>(p.s1()) + 1);
    c.b.resize(static_cast<std::size_t>(p.s2()) + 1);
    c.a[0] = 0.5;
    for (int j = 0; j < p.s1(); ++j)
        c.a[static_cast<std::size_t>(j) + 1] =
            c.a[static_cast<std::size_t>(j)] * eta(ell, 2 * j + 1) * eta(ell, 2 * j + 2);
    c.b[0] = 1.0;
    for (int j = 0; j < p.s2(); ++j)
        c.b[static_cast<std::size_t>(j) + 1] =
            c.b[static_cast<std::size_t>(j)] * eta(ell, 2 * j) * eta(ell, 2 * j + 1);
    return c;
}

PadeCoefficients gen_coeffs_alternative(OrderParam p) {
    const int ell = p.ell();
    PadeCoefficients c;
    c.a.resize(static_cast<std::size_t>(p.s1()) + 1);
    c.b.resize(static_cast<std::size_t>(p.s2()) + 1);
    c.b[0] = 1.0;
    c.a[0] = 0.5;
    for (int j = 0; j < p.s1(); ++j) {
        c.b[static_cast<std::size_t>(j) + 1] =
            c.a[static_cast<std::size_t>(j)] * eta(ell, 2 * j + 1);
        c.a[static_cast<std::size_t>(j) + 1] =
            c.b[static_cast<std::size_t>(j) + 1] * eta(ell, 2 * j + 2);
    }
    if (ell % 2 == 0)
        c.b[static_cast<std::size_t>(p.s2())] =
            c.a[static_cast<std::size_t>(p.s1())] * eta(ell, 2 * p.s1() + 1);
    return c;
}

const PadeCoefficients& cached_coeffs(OrderParam p) {
    static const auto table = [] {
        std::array<PadeCoefficients, kMaxOrder + 1> t;
        for (int ell = 1; ell <= kMaxOrder; ++ell)
            t[static_cast<std::size_t>(ell)] = gen_coeffs_alternative(OrderParam(ell));
        return t;
    }();
    return table[static_cast<std::size_t>(p.ell())];
}

double convergence_domain_bound(int ell) {
    switch (ell) {
        case 2: return 12.0;
        case 3: return 10.0;
        case 4: return 12650.0 / 1281.0;
        case 5: return 2349.0 / 238.0;
        case 6: return 10294.0 / 1043.0;
        default: return std::numeric_limits<double>::infinity();
    }
}

namespace detail {

long double horner_ld(std::span<const double> coeffs, long double x) {
    if (coeffs.empty()) throw std::invalid_argument("horner: empty coefficient array");
    long double t = coeffs.back();
    for (std::size_t i = coeffs.size() - 1; i-- > 0;) t = t * x + coeffs[i];
    return t;
}

long double beta_ld(int ell, const PadeCoefficients& coeffs, double c) {
    if (!(c >= 0.0) || !std::isfinite(c))
        throw std::invalid_argument("beta: c must be finite and >= 0");
    const long double num = horner_ld(coeffs.a, -static_cast<long double>(c));
    const long double den = horner_ld(coeffs.b, -static_cast<long double>(c));
    // All b[j] > 0, so evaluating at +c gives the magnitude scale of the terms
    // that cancel in den.
    const long double scale = horner_ld(coeffs.b, static_cast<long double>(c));
    const long double guard = 1e-12L * (scale > 1.0L ? scale : 1.0L);
    if (den > -guard && den < guard) throw SingularDenominator(ell, c);
    return num / den;
}

} // namespace detail

BetaValue beta(OrderParam p, const PadeCoefficients& coeffs, double c) {
    BetaValue r;
    r.value = static_cast<double>(detail::beta_ld(p.ell(), coeffs, c));
    r.ell = p.ell();
    r.c = c;
    r.beyond_convergence_domain = c > convergence_domain_bound(p.ell());
    return r;
}

BetaValue beta(OrderParam p, double c) { return beta(p, cached_coeffs(p), c); }

} // namespace symquat
