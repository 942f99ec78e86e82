// psido: evaluate, sweep and advise on truncations of the Wigner pseudo-differential term.

#include "psido/errors.hpp"
#include "psido/harness.hpp"
#include "psido/operators.hpp"
#include "psido/reference.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using psido::KeyValues;

// Flags that map one-to-one onto config keys. Empty means "not given".
struct SchemeFlags {
    std::string config_path;
    std::string potential;
    std::string state;
    std::string scheme;
    std::string xdomain;
    std::string kdomain;
    std::string grid;
    std::string L_y, N_mu, L_k, N_xi, P, N_nu;
    std::string f_xdomain;
    std::string quad_order, quad_ppu;
    std::string hbar;

    void attach(CLI::App* cmd)
    {
        cmd->add_option("--config", config_path, "key=value file; flags override it");
        cmd->add_option("--potential", potential, "gauss | dwell | rtd | file:PATH");
        cmd->add_option("--state", state, "gauss | file:PATH");
        cmd->add_option("--scheme", scheme, "y | k | m | f");
        cmd->add_option("--xdomain", xdomain, "a,b");
        cmd->add_option("--kdomain", kdomain, "a,b");
        cmd->add_option("--grid", grid, "NX,NK");
        cmd->add_option("--L_y", L_y);
        cmd->add_option("--N_mu", N_mu);
        cmd->add_option("--L_k", L_k);
        cmd->add_option("--N_xi", N_xi);
        cmd->add_option("--P", P);
        cmd->add_option("--N_nu", N_nu);
        cmd->add_option("--f-xdomain", f_xdomain, "force-spectrum domain a,b");
        cmd->add_option("--quad-order", quad_order);
        cmd->add_option("--quad-ppu", quad_ppu, "quadrature panels per unit length");
        cmd->add_option("--hbar", hbar);
    }

    [[nodiscard]] KeyValues collect() const
    {
        KeyValues kv = config_path.empty() ? KeyValues{} : psido::load_key_values(config_path);
        const std::pair<const char*, const std::string*> flags[] = {
            {"potential", &potential}, {"state", &state},       {"scheme", &scheme},
            {"xdomain", &xdomain},     {"kdomain", &kdomain},   {"grid", &grid},
            {"L_y", &L_y},             {"N_mu", &N_mu},         {"L_k", &L_k},
            {"N_xi", &N_xi},           {"P", &P},               {"N_nu", &N_nu},
            {"f_xdomain", &f_xdomain}, {"quad_order", &quad_order}, {"quad_ppu", &quad_ppu},
            {"hbar", &hbar},
        };
        for (const auto& [key, value] : flags) {
            if (!value->empty()) {
                kv[key] = *value;
            }
        }
        return kv;
    }
};

int run_compute(const SchemeFlags& flags, const std::string& out_path)
{
    const psido::ExperimentSpec spec = psido::spec_from_key_values(flags.collect());
    const psido::Potential potential = psido::make_potential(spec.potential);
    const psido::WignerState state = psido::make_state(spec.state);
    const auto grid = psido::PhaseGrid::uniform(spec.x_domain, spec.k_domain, spec.nx, spec.nk);
    const psido::PsiDoField field = psido::evaluate(state, potential, grid, spec.scheme);

    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!out_path.empty() && out_path != "-") {
        file.open(out_path);
        if (!file) {
            throw psido::IoError("cannot write " + out_path);
        }
        out = &file;
    }
    std::istringstream described(psido::describe(spec.scheme));
    for (std::string line; std::getline(described, line);) {
        *out << "# " << line << '\n';
    }
    *out << "# realness_defect=" << field.realness_defect << '\n';
    *out << "x,k,re,im\n";
    char buf[128];
    for (std::size_t ix = 0; ix < grid.x.size(); ++ix) {
        for (std::size_t ik = 0; ik < grid.k.size(); ++ik) {
            const auto v = field.at(ix, ik);
            std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", grid.x.point(ix), grid.k.point(ik), v.real(),
                          v.imag());
            *out << buf;
        }
    }
    if (!*out) {
        throw psido::IoError("failed writing field");
    }
    return 0;
}

int run_sweep(const std::string& preset, const std::string& spec_path, const std::string& format,
              const std::string& out_path)
{
    psido::ExperimentSpec spec;
    if (!preset.empty()) {
        spec = psido::preset(preset);
    } else {
        spec = psido::spec_from_key_values(psido::load_key_values(spec_path));
    }
    if (!format.empty()) {
        spec.format = format;
    }
    const auto rows = psido::run_sweep(spec);
    if (out_path.empty() || out_path == "-") {
        psido::emit(rows, spec.format, std::cout, spec.note);
    } else {
        psido::emit(rows, spec.format, std::filesystem::path(out_path), spec.note);
    }
    return 0;
}

int run_advise(const SchemeFlags& flags, double target)
{
    KeyValues kv = flags.collect();
    const psido::Potential potential = psido::make_potential(kv.count("potential") ? kv["potential"] : "gauss");
    const psido::WignerState state = psido::make_state(kv.count("state") ? kv["state"] : "gauss");
    const psido::Interval x_domain = kv.count("xdomain") ? psido::parse_interval(kv["xdomain"])
                                                         : psido::Interval(-10.0, 10.0);
    const psido::Interval k_domain = kv.count("kdomain") ? psido::parse_interval(kv["kdomain"])
                                                         : psido::Interval(-psido::two_pi, psido::two_pi);
    const auto kind = psido::parse_scheme_kind(kv.count("scheme") ? kv["scheme"] : "k");
    const psido::Advice advice = psido::advise_parameters(potential, state, x_domain, k_domain, kind, target);
    for (const auto& w : advice.warnings) {
        std::cerr << "warning: " << w << '\n';
    }
    std::cout << psido::describe(advice.config);
    if (advice.estimate) {
        std::cout << "estimate=" << *advice.estimate << '\n';
    }
    return 0;
}

int run_oracle(const SchemeFlags& flags, double x, double k)
{
    KeyValues kv = flags.collect();
    const std::string pot_spec = kv.count("potential") ? kv["potential"] : "gauss";
    const std::string state_spec = kv.count("state") ? kv["state"] : "gauss";
    const psido::Potential potential = psido::make_potential(pot_spec);
    const psido::WignerState state = psido::make_state(state_spec);
    const double hbar = kv.count("hbar") ? psido::parse_number(kv["hbar"], "hbar") : 1.0;

    double value = 0.0;
    std::string name;
    if (potential.is_gauss_barrier() && state.is_gauss_packet()) {
        value = psido::gauss_barrier_reference(x, k, {32, 2.0}, 10.0, hbar);
        name = "analytic";
    } else if (const auto* w = potential.as_double_well()) {
        value = psido::double_well_reference(state, x, k, w->a, w->b, hbar);
        name = "moyal";
    } else {
        psido::BruteForceOptions opts = psido::default_brute_force_options(potential);
        if (kv.count("kdomain")) {
            opts.k_domain = psido::parse_interval(kv["kdomain"]);
        }
        opts.hbar = hbar;
        value = psido::brute_force_reference(state, potential, x, k, opts);
        name = "brute_force";
    }
    std::printf("value=%.17g\noracle=%s\n", value, name.c_str());
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Truncated evaluation of the Wigner pseudo-differential term"};
    app.require_subcommand(1);

    SchemeFlags compute_flags;
    std::string compute_out;
    auto* compute = app.add_subcommand("compute", "evaluate one truncation on a grid, write x,k,re,im CSV");
    compute_flags.attach(compute);
    compute->add_option("--out", compute_out, "output path (default stdout)");

    std::string preset;
    std::string spec_path;
    std::string format;
    std::string sweep_out;
    auto* sweep = app.add_subcommand("sweep", "run a parameter sweep and emit one row per value");
    auto* preset_opt = sweep->add_option("--preset", preset, "table1 .. table7");
    auto* spec_opt = sweep->add_option("--spec", spec_path, "key=value experiment file");
    preset_opt->excludes(spec_opt);
    sweep->add_option("--format", format, "csv | json");
    sweep->add_option("--out", sweep_out, "output path (default stdout)");

    SchemeFlags advise_flags;
    double target = 0.0;
    auto* advise = app.add_subcommand("advise", "suggest truncation parameters for a target error");
    advise_flags.attach(advise);
    advise->add_option("--target", target, "target error")->required();

    SchemeFlags oracle_flags;
    double ox = 0.0;
    double ok = 0.0;
    auto* oracle = app.add_subcommand("oracle", "reference value at one phase-space point");
    oracle_flags.attach(oracle);
    oracle->add_option("--x", ox)->required();
    oracle->add_option("--k", ok)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*compute) {
            return run_compute(compute_flags, compute_out);
        }
        if (*sweep) {
            if (preset.empty() && spec_path.empty()) {
                throw psido::ConfigError("sweep needs --preset or --spec");
            }
            return run_sweep(preset, spec_path, format, sweep_out);
        }
        if (*advise) {
            return run_advise(advise_flags, target);
        }
        if (*oracle) {
            return run_oracle(oracle_flags, ox, ok);
        }
    } catch (const psido::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.exit_code();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
