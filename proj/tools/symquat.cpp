// Command-line experiment runner: propagation accuracy sweeps and parameter
// tables, written as machine-readable CSV. Data goes to --out (or stdout),
// progress to stderr, so pipelines stay clean.

#include <cmath>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "symquat/scenario.hpp"

namespace {

using nlohmann::json;

struct CliOptions {
    symquat::ScenarioSpec spec;
    std::string out;
    std::string config;
};

// Fill spec fields from a JSON config file; command-line flags override.
void apply_config(const std::string& path, symquat::ScenarioSpec& spec, std::string& out,
                  const CLI::App& cmd) {
    std::ifstream in(path);
    if (!in) throw symquat::UsageError("cannot open config file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw symquat::UsageError("config file '" + path + "': " + e.what());
    }
    // Not every flag exists on every subcommand; a config key for an absent
    // flag applies unconditionally (the spec field is simply unused there).
    auto unset = [&](const std::string& flag) {
        const CLI::Option* opt = cmd.get_option_no_throw(flag);
        return opt == nullptr || opt->count() == 0;
    };
    if (j.contains("ell") && unset("--ell")) spec.ells = j["ell"].get<std::vector<int>>();
    if (j.contains("tau") && unset("--tau")) spec.taus = j["tau"].get<std::vector<double>>();
    if (j.contains("t0") && unset("--t0")) spec.t0 = j["t0"].get<double>();
    if (j.contains("tf") && unset("--tf")) spec.tf = j["tf"].get<double>();
    if (j.contains("omega") && unset("--omega")) {
        auto v = j["omega"].get<std::vector<double>>();
        if (v.size() != 3) throw symquat::UsageError("config 'omega' must have 3 components");
        spec.omega = {v[0], v[1], v[2]};
    }
    if (j.contains("profile") && unset("--profile"))
        spec.profile = j["profile"].get<std::string>();
    if (j.contains("omega0") && unset("--omega0")) spec.omega0 = j["omega0"].get<double>();
    if (j.contains("xi") && unset("--xi")) spec.xi = j["xi"].get<double>();
    if (j.contains("c") && unset("--c")) spec.c_values = j["c"].get<std::vector<double>>();
    if (j.contains("oracle_substeps") && unset("--oracle-substeps"))
        spec.oracle_substeps = j["oracle_substeps"].get<int>();
    if (j.contains("out") && out.empty()) out = j["out"].get<std::string>();
}

void add_common_flags(CLI::App* cmd, CliOptions& opt, bool wants_span, bool wants_rate) {
    cmd->add_option("--ell", opt.spec.ells, "order parameters (comma separated)")
        ->delimiter(',');
    cmd->add_option("--out", opt.out, "output CSV path (default: stdout)");
    cmd->add_option("--config", opt.config, "JSON config file; flags override its values");
    if (wants_span) {
        cmd->add_option("--tau", opt.spec.taus, "time steps in seconds (comma separated)")
            ->delimiter(',');
        cmd->add_option("--t0", opt.spec.t0, "span start, seconds");
        cmd->add_option("--tf", opt.spec.tf, "span end, seconds");
    }
    if (wants_rate) {
        cmd->add_option("--profile", opt.spec.profile,
                        "rate profile: 'special' (closed form) or 'decaying'");
        cmd->add_option("--omega0", opt.spec.omega0, "profile base rate, rad/s");
        cmd->add_option("--xi", opt.spec.xi, "profile cone angle, rad");
    }
}

int run(const CliOptions& opt, const CLI::App& cmd) {
    symquat::ScenarioSpec spec = opt.spec;
    std::string out = opt.out;
    if (!opt.config.empty()) apply_config(opt.config, spec, out, cmd);
    symquat::validate(spec);

    std::ofstream file;
    if (!out.empty()) {
        file.open(out);
        if (!file) {
            std::cerr << "error: cannot open output file '" << out << "'\n";
            return 2;
        }
    }
    std::ostream& data = out.empty() ? std::cout : file;
    symquat::run_scenario(spec, data, &std::cerr);
    if (!out.empty() && !file) {
        std::cerr << "error: write to '" << out << "' failed\n";
        return 2;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"even-order symplectic quaternion kinematics experiment runner"};
    app.require_subcommand(1);

    const double pi = std::acos(-1.0);
    CliOptions lti, special, general, betat, coeff;

    CLI::App* c_lti = app.add_subcommand("lti-sweep",
                                         "constant-rate E_max sweep vs the closed form");
    lti.spec.id = symquat::ScenarioId::lti_sweep;
    add_common_flags(c_lti, lti, true, false);
    c_lti->add_option("--omega", lti.spec.omega,
                      "constant angular velocity, three comma-separated rad/s")
        ->delimiter(',');

    CLI::App* c_special = app.add_subcommand(
        "special-ltv-sweep", "time-varying E_max sweep vs the special closed form");
    special.spec.id = symquat::ScenarioId::special_ltv_sweep;
    special.spec.profile = "special";
    special.spec.omega0 = 2.0 * pi;
    special.spec.xi = pi / 80.0;
    add_common_flags(c_special, special, true, true);

    CLI::App* c_general = app.add_subcommand(
        "general-ltv-oracle", "time-varying sweep vs the high-accuracy oracle");
    general.spec.id = symquat::ScenarioId::general_ltv_oracle;
    general.spec.profile = "decaying";
    general.spec.omega0 = 2.0 * pi;
    general.spec.xi = pi / 80.0;
    add_common_flags(c_general, general, true, true);
    c_general->add_option("--oracle-substeps", general.spec.oracle_substeps,
                          "oracle substeps per grid cell (default 256)");

    CLI::App* c_beta = app.add_subcommand("beta-table", "beta(ell, c) over a c grid");
    betat.spec.id = symquat::ScenarioId::beta_table;
    add_common_flags(c_beta, betat, false, false);
    c_beta->add_option("--c", betat.spec.c_values, "c values (comma separated)")
        ->delimiter(',');

    CLI::App* c_coeff = app.add_subcommand("coefficient-dump",
                                           "split-polynomial coefficients per ell");
    coeff.spec.id = symquat::ScenarioId::coefficient_dump;
    add_common_flags(c_coeff, coeff, false, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (c_lti->parsed()) return run(lti, *c_lti);
        if (c_special->parsed()) return run(special, *c_special);
        if (c_general->parsed()) return run(general, *c_general);
        if (c_beta->parsed()) return run(betat, *c_beta);
        if (c_coeff->parsed()) return run(coeff, *c_coeff);
    } catch (const symquat::UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 1;
}
