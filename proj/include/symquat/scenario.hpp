#ifndef SYMQUAT_SCENARIO_HPP
#define SYMQUAT_SCENARIO_HPP

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "symquat/errors.hpp"

namespace symquat {

enum class ScenarioId {
    lti_sweep,         ///< constant-rate accuracy sweep vs the closed form
    special_ltv_sweep, ///< time-varying sweep vs the special closed form
    general_ltv_oracle,///< time-varying sweep vs the high-accuracy oracle
    beta_table,        ///< beta(ell, c) over a grid
    coefficient_dump,  ///< split-polynomial coefficients per ell
};

ScenarioId scenario_from_name(const std::string& name); ///< throws UsageError
std::string scenario_name(ScenarioId id);

/// One experiment request. Grids are (ell x tau) for the sweeps, (ell x c)
/// for beta-table and (ell) for coefficient-dump. All scenarios are fully
/// deterministic: re-running a spec produces byte-identical CSV.
struct ScenarioSpec {
    ScenarioId id = ScenarioId::beta_table;
    std::vector<int> ells;
    std::vector<double> taus;
    double t0 = 0.0;
    double tf = 0.0;
    std::array<double, 3> omega{0.0, 0.0, 0.0}; ///< lti-sweep rate
    std::string profile = "special";            ///< "special" or "decaying"
    double omega0 = 0.0;
    double xi = 0.0;
    std::vector<double> c_values; ///< beta-table grid
    int oracle_substeps = 256;
};

/// Validates a spec; throws UsageError naming the offending field.
void validate(const ScenarioSpec& spec);

/// Runs the scenario, writing CSV rows (header + one row per result) to
/// `data`. One summary line per grid cell goes to `progress` when non-null.
/// CSV columns: scenario,ell,tau,t0,tf,aux,metric,value -- `aux` carries the
/// scenario-specific parameter (c for beta-table, the coefficient index for
/// coefficient-dump) and is empty elsewhere. Values are printed with 17
/// significant digits so they round-trip.
void run_scenario(const ScenarioSpec& spec, std::ostream& data, std::ostream* progress);

} // namespace symquat

#endif
