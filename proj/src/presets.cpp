#include "psido/harness.hpp"

#include "psido/errors.hpp"

#include <numbers>

namespace psido {

namespace {

const Interval k_default{-two_pi, two_pi};
const Interval x_local{-10.0, 10.0};
const Interval x_wide{-15.0, 15.0};

ExperimentSpec base(std::string potential, Interval x_domain, TruncationConfig scheme, std::string param,
                    std::vector<double> values, OracleKind oracle)
{
    ExperimentSpec spec;
    spec.potential = std::move(potential);
    spec.x_domain = x_domain;
    spec.k_domain = k_default;
    spec.scheme = std::move(scheme);
    spec.sweep_param = std::move(param);
    spec.sweep_values = std::move(values);
    spec.oracle = oracle;
    return spec;
}

} // namespace

std::vector<std::string> preset_names()
{
    return {"table1", "table2", "table3", "table4", "table5", "table6", "table7"};
}

ExperimentSpec preset(const std::string& name)
{
    constexpr double pi = std::numbers::pi;
    if (name == "table1") {
        auto s = base("gauss", x_local, {YConfig{40.0, 40, {}}}, "L_y", {20, 24, 28, 32, 36, 40},
                      OracleKind::analytic);
        s.note = "gauss barrier, y-truncation, N_mu = 40";
        return s;
    }
    if (name == "table2") {
        auto s = base("gauss", x_local, {KConfig{4.0 * pi, 40, {}}}, "N_xi", {20, 24, 28, 32, 36, 40},
                      OracleKind::analytic);
        s.note = "gauss barrier, k-truncation, L_k = 4 pi";
        return s;
    }
    if (name == "table3") {
        auto s = base("gauss", x_local, {FConfig{30, x_local, {}}}, "N_nu", {10, 14, 18, 22, 26, 30},
                      OracleKind::analytic);
        s.note = "gauss barrier, f-truncation over [-10, 10]";
        return s;
    }
    if (name == "table4") {
        // N_mu = 0: lattice sized per row to span K.
        auto s = base("dwell", x_wide, {YConfig{40.0, 0, {}}}, "L_y", {30, 35, 40, 45, 50, 55}, OracleKind::moyal);
        s.note = "double well, y-truncation, N_mu covering K";
        return s;
    }
    if (name == "table5") {
        auto s = base("dwell", x_wide, {KConfig{4.0 * pi, 40, {}}}, "N_xi", {20, 30, 40, 50, 60, 70},
                      OracleKind::moyal);
        s.note = "double well, k-truncation, L_k = 4 pi";
        return s;
    }
    if (name == "table6") {
        auto s = base("dwell", x_wide, {FConfig{30, x_wide, {}}}, "N_nu",
                      {30, 40, 50, 60, 70, 80, 90, 100, 110, 120}, OracleKind::moyal);
        s.note = "double well, f-truncation over [-15, 15]";
        return s;
    }
    if (name == "table7") {
        auto s = base("rtd", x_local, {KConfig{6.0 * pi, 40, {}}}, "N_xi", {20, 30, 40, 45, 50, 60},
                      OracleKind::brute_force);
        s.note = "property-check only: RTD-like surrogate (two Gaussian bumps, spline through 24001 samples "
                 "on [-30, 30]), k-truncation, L_k = 6 pi, brute-force oracle";
        return s;
    }
    throw ConfigError("unknown preset '" + name + "' (table1 .. table7)");
}

} // namespace psido
