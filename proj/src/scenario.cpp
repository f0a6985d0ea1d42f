#include "symquat/scenario.hpp"

#include <cstdio>
#include <ostream>

#include "symquat/analysis.hpp"

namespace symquat {

ScenarioId scenario_from_name(const std::string& name) {
    if (name == "lti-sweep") return ScenarioId::lti_sweep;
    if (name == "special-ltv-sweep") return ScenarioId::special_ltv_sweep;
    if (name == "general-ltv-oracle") return ScenarioId::general_ltv_oracle;
    if (name == "beta-table") return ScenarioId::beta_table;
    if (name == "coefficient-dump") return ScenarioId::coefficient_dump;
    throw UsageError("unknown scenario '" + name + "'");
}

std::string scenario_name(ScenarioId id) {
    switch (id) {
        case ScenarioId::lti_sweep: return "lti-sweep";
        case ScenarioId::special_ltv_sweep: return "special-ltv-sweep";
        case ScenarioId::general_ltv_oracle: return "general-ltv-oracle";
        case ScenarioId::beta_table: return "beta-table";
        case ScenarioId::coefficient_dump: return "coefficient-dump";
    }
    throw UsageError("unknown scenario id");
}

namespace {

std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.16e", x);
    return buf;
}

struct CsvWriter {
    std::ostream& out;
    std::string scenario;

    void header() { out << "scenario,ell,tau,t0,tf,aux,metric,value\n"; }

    void row(int ell, const std::string& tau, const std::string& t0, const std::string& tf,
             const std::string& aux, const std::string& metric, double value) {
        out << scenario << ',' << ell << ',' << tau << ',' << t0 << ',' << tf << ',' << aux << ','
            << metric << ',' << fmt17(value) << '\n';
    }
};

void require(bool ok, const std::string& field, const std::string& why) {
    if (!ok) throw UsageError("scenario field '" + field + "': " + why);
}

void validate_grid(const ScenarioSpec& spec, bool needs_tau, bool needs_span) {
    require(!spec.ells.empty(), "ell", "grid must be non-empty");
    for (int l : spec.ells)
        require(l >= 1 && l <= kMaxOrder, "ell", "values must be in [1, 32]");
    if (needs_tau) {
        require(!spec.taus.empty(), "tau", "grid must be non-empty");
        for (double t : spec.taus) require(t > 0.0, "tau", "values must be positive");
    }
    if (needs_span) require(spec.tf > spec.t0, "tf", "span must be positive");
}

} // namespace

void validate(const ScenarioSpec& spec) {
    switch (spec.id) {
        case ScenarioId::lti_sweep:
            validate_grid(spec, true, true);
            break;
        case ScenarioId::special_ltv_sweep:
        case ScenarioId::general_ltv_oracle:
            validate_grid(spec, true, true);
            require(spec.omega0 != 0.0, "omega0", "must be non-zero");
            require(spec.profile == "special" || spec.profile == "decaying", "profile",
                    "must be 'special' or 'decaying'");
            if (spec.id == ScenarioId::general_ltv_oracle)
                require(spec.oracle_substeps >= 1, "oracle-substeps", "must be >= 1");
            break;
        case ScenarioId::beta_table:
            validate_grid(spec, false, false);
            require(!spec.c_values.empty(), "c", "grid must be non-empty");
            for (double c : spec.c_values) require(c >= 0.0, "c", "values must be >= 0");
            break;
        case ScenarioId::coefficient_dump:
            validate_grid(spec, false, false);
            break;
    }
}

void run_scenario(const ScenarioSpec& spec, std::ostream& data, std::ostream* progress) {
    validate(spec);
    CsvWriter csv{data, scenario_name(spec.id)};
    csv.header();
    const std::string st0 = fmt17(spec.t0), stf = fmt17(spec.tf);

    auto note = [&](const std::string& line) {
        if (progress) *progress << line << '\n';
    };

    switch (spec.id) {
        case ScenarioId::lti_sweep: {
            const AngularVelocity w{spec.omega[0], spec.omega[1], spec.omega[2]};
            const QuatState q0{1.0, 0.0, 0.0, 0.0};
            for (int l : spec.ells) {
                for (double tau : spec.taus) {
                    PropagationConfig cfg(OrderParam(l), tau, spec.t0, spec.tf, q0);
                    MaxErrorAccumulator acc;
                    propagate_lti(cfg, w, [&](const TrajectorySample& s) {
                        acc.add(s.q, analytic_lti_solution(s.t - spec.t0, w, q0));
                    });
                    const double e = acc.report().e_max;
                    csv.row(l, fmt17(tau), st0, stf, "", "E_max", e);
                    note("lti-sweep ell=" + std::to_string(l) + " tau=" + fmt17(tau) +
                         " E_max=" + fmt17(e));
                }
            }
            break;
        }
        case ScenarioId::special_ltv_sweep: {
            const SpecialLtvProfile prof = special_ltv_profile(spec.omega0, spec.xi);
            for (int l : spec.ells) {
                for (double tau : spec.taus) {
                    PropagationConfig cfg(OrderParam(l), tau, spec.t0, spec.tf,
                                          prof.analytic_state(spec.t0));
                    MaxErrorAccumulator acc;
                    propagate_ltv(cfg, [&](double t) { return prof.omega(t); },
                                  [&](const TrajectorySample& s) {
                                      acc.add(s.q, prof.analytic_state(s.t));
                                  });
                    const double e = acc.report().e_max;
                    csv.row(l, fmt17(tau), st0, stf, "", "E_max", e);
                    note("special-ltv-sweep ell=" + std::to_string(l) + " tau=" + fmt17(tau) +
                         " E_max=" + fmt17(e));
                }
            }
            break;
        }
        case ScenarioId::general_ltv_oracle: {
            // No closed form here; the oracle trajectory is the reference.
            const DecayingLtvProfile decaying{spec.omega0, spec.xi};
            const SpecialLtvProfile special{spec.omega0, spec.xi};
            const bool use_decaying = spec.profile == "decaying";
            auto omega_fn = [&](double t) {
                return use_decaying ? decaying.omega(t) : special.omega(t);
            };
            const QuatState q0 =
                use_decaying ? decaying.initial_state() : special.analytic_state(spec.t0);
            for (double tau : spec.taus) {
                const auto ref = collect_reference_oracle(omega_fn, q0, spec.t0, spec.tf, tau,
                                                          spec.oracle_substeps);
                for (int l : spec.ells) {
                    PropagationConfig cfg(OrderParam(l), tau, spec.t0, spec.tf, q0);
                    MaxErrorAccumulator acc;
                    propagate_ltv(cfg, omega_fn, [&](const TrajectorySample& s) {
                        acc.add(s.q, ref[static_cast<std::size_t>(s.k)].q);
                    });
                    const double e = acc.report().e_max;
                    csv.row(l, fmt17(tau), st0, stf, "", "E_vs_oracle", e);
                    note("general-ltv-oracle ell=" + std::to_string(l) + " tau=" + fmt17(tau) +
                         " E_vs_oracle=" + fmt17(e));
                }
            }
            break;
        }
        case ScenarioId::beta_table: {
            bool warned = false;
            for (int l : spec.ells) {
                const OrderParam p(l);
                for (double c : spec.c_values) {
                    const BetaValue b = beta(p, c);
                    if (b.beyond_convergence_domain && !warned && progress) {
                        *progress << "warning: c beyond the tabulated convergence bound for ell="
                                  << l << "; beta accuracy degrades there\n";
                        warned = true;
                    }
                    csv.row(l, "", st0, stf, fmt17(c), "beta", b.value);
                }
                note("beta-table ell=" + std::to_string(l) + " (" +
                     std::to_string(spec.c_values.size()) + " c values)");
            }
            break;
        }
        case ScenarioId::coefficient_dump: {
            for (int l : spec.ells) {
                const PadeCoefficients& coeffs = cached_coeffs(OrderParam(l));
                for (std::size_t j = 0; j < coeffs.a.size(); ++j)
                    csv.row(l, "", st0, stf, std::to_string(j), "a", coeffs.a[j]);
                for (std::size_t j = 0; j < coeffs.b.size(); ++j)
                    csv.row(l, "", st0, stf, std::to_string(j), "b", coeffs.b[j]);
                note("coefficient-dump ell=" + std::to_string(l));
            }
            break;
        }
    }
}

} // namespace symquat
