#pragma once

#include "psido/operators.hpp"
#include "psido/potential.hpp"
#include "psido/reference.hpp"
#include "psido/state.hpp"

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace psido {

enum class OracleKind { analytic, moyal, brute_force };

std::string to_string(OracleKind kind);
OracleKind parse_oracle(const std::string& name);

/**
 * One parameter sweep: a scheme template, the parameter to vary and the
 * oracle every row is measured against.
 *
 * potential: "gauss", "dwell", "rtd" or "file:PATH" (two-column x V table).
 * state:     "gauss" or "file:PATH" (see save_sampled).
 */
struct ExperimentSpec {
    std::string potential = "gauss";
    std::string state = "gauss";
    Interval x_domain{-10.0, 10.0};
    Interval k_domain{-two_pi, two_pi};
    TruncationConfig scheme{YConfig{}};
    std::string sweep_param;
    std::vector<double> sweep_values;
    OracleKind oracle = OracleKind::analytic;
    std::size_t nx = 201;
    std::size_t nk = 201;
    std::string format = "csv";
    // Emitted as leading comment lines.
    std::string note;
};

struct SweepRow {
    double param = 0.0;
    std::optional<double> eps_inf;
    std::optional<double> estimator;
    double realness_defect = 0.0;
    double wall_time_s = 0.0;
    std::optional<std::string> error;
};

// Parameters a scheme accepts in a sweep: Y {L_y, N_mu}, K {L_k, N_xi}, M {P}, F {N_nu}.
std::vector<std::string> sweep_parameters(const Scheme& scheme);
// Copy of `config` with one parameter replaced; counts must be integral.
TruncationConfig with_parameter(const TruncationConfig& config, const std::string& name, double value);

Potential make_potential(const std::string& spec);
WignerState make_state(const std::string& spec);

// Throws ConfigError if the sweep parameter or the oracle does not fit.
void validate(const ExperimentSpec& spec);

// Reference values for the experiment's oracle on its evaluation grid.
GridSamples oracle_samples(const ExperimentSpec& spec, const WignerState& state, const Potential& potential);

// N_mu = 0 in a Y template means "just enough lattice points to span K".
int covering_n_mu(double L_y, const Interval& k_domain);

/**
 * One row per sweep value, in order. The oracle is sampled once; errors
 * raised while evaluating a row (e.g. a Moyal term a tabulated potential
 * cannot supply) are recorded in that row instead of aborting the sweep.
 */
std::vector<SweepRow> run_sweep(const ExperimentSpec& spec);

// Built-in sweeps table1 .. table7.
std::vector<std::string> preset_names();
ExperimentSpec preset(const std::string& name);

// Value a Y-window must push below machine precision for a local potential:
// max |V(+-L_y/4)|, the potential at half the window's half-width.
double y_window_edge_value(const Potential& p, double L_y);

struct Advice {
    TruncationConfig config;
    std::vector<std::string> warnings;
    std::optional<double> estimate; // estimator (or edge value) at the advised config
};

enum class SchemeKind { y, k, m, f };
SchemeKind parse_scheme_kind(const std::string& tag);

Advice advise_parameters(const Potential& p, const WignerState& s, const Interval& x_domain,
                         const Interval& k_domain, SchemeKind kind, double target_eps);

// CSV: header `param,eps_inf,estimator,realness_defect,wall_time_s`, "%.5e" cells,
// an empty cell for an absent value. JSON: array of objects, null for absent.
void emit(const std::vector<SweepRow>& rows, const std::string& format, std::ostream& out,
          const std::string& note = {});
void emit(const std::vector<SweepRow>& rows, const std::string& format, const std::filesystem::path& path,
          const std::string& note = {});

// Parses CSV written by emit (comment lines skipped).
std::vector<SweepRow> parse_csv(std::istream& in);

// key=value lines, '#' comments. Later keys override earlier ones.
using KeyValues = std::map<std::string, std::string>;
KeyValues parse_key_values(std::istream& in);
KeyValues load_key_values(const std::filesystem::path& path);

/**
 * Builds an ExperimentSpec from key=value settings:
 *   potential, state, xdomain=a,b, kdomain=a,b, grid=NX,NK, scheme=y|k|m|f,
 *   L_y, N_mu, L_k, N_xi, P, N_nu, f_xdomain=a,b, quad_order, quad_ppu, hbar,
 *   sweep=NAME, values=v1,v2,..., oracle=analytic|moyal|brute_force, format, note
 * Unknown keys are rejected.
 */
ExperimentSpec spec_from_key_values(const KeyValues& kv);

// Shared parsers for "a,b" and "v1,v2,..." lists.
Interval parse_interval(const std::string& text);
std::vector<double> parse_list(const std::string& text);
double parse_number(const std::string& text, const std::string& what);

} // namespace psido
