#include "psido/harness.hpp"

#include "psido/errors.hpp"
#include "detail.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

namespace psido {

using detail::overloaded;

std::string to_string(OracleKind kind)
{
    switch (kind) {
    case OracleKind::analytic: return "analytic";
    case OracleKind::moyal: return "moyal";
    case OracleKind::brute_force: return "brute_force";
    }
    return "unknown";
}

OracleKind parse_oracle(const std::string& name)
{
    if (name == "analytic") {
        return OracleKind::analytic;
    }
    if (name == "moyal") {
        return OracleKind::moyal;
    }
    if (name == "brute_force" || name == "brute") {
        return OracleKind::brute_force;
    }
    throw ConfigError("unknown oracle '" + name + "' (analytic, moyal, brute_force)");
}

std::vector<std::string> sweep_parameters(const Scheme& scheme)
{
    return std::visit(overloaded{
                          [](const YConfig&) { return std::vector<std::string>{"L_y", "N_mu"}; },
                          [](const KConfig&) { return std::vector<std::string>{"L_k", "N_xi"}; },
                          [](const MConfig&) { return std::vector<std::string>{"P"}; },
                          [](const FConfig&) { return std::vector<std::string>{"N_nu"}; },
                      },
                      scheme);
}

namespace {

int as_count(double value, const std::string& name)
{
    if (!std::isfinite(value) || value != std::floor(value) || value < 0.0 || value > 1e6) {
        throw ConfigError(name + " must be a non-negative integer, got " + std::to_string(value));
    }
    return static_cast<int>(value);
}

} // namespace

TruncationConfig with_parameter(const TruncationConfig& config, const std::string& name, double value)
{
    TruncationConfig out = config;
    const bool ok = std::visit(overloaded{
                                   [&](YConfig& c) {
                                       if (name == "L_y") {
                                           c.L_y = value;
                                       } else if (name == "N_mu") {
                                           c.N_mu = as_count(value, name);
                                       } else {
                                           return false;
                                       }
                                       return true;
                                   },
                                   [&](KConfig& c) {
                                       if (name == "L_k") {
                                           c.L_k = value;
                                       } else if (name == "N_xi") {
                                           c.N_xi = as_count(value, name);
                                       } else {
                                           return false;
                                       }
                                       return true;
                                   },
                                   [&](MConfig& c) {
                                       if (name != "P") {
                                           return false;
                                       }
                                       c.P = as_count(value, name);
                                       return true;
                                   },
                                   [&](FConfig& c) {
                                       if (name != "N_nu") {
                                           return false;
                                       }
                                       c.N_nu = as_count(value, name);
                                       return true;
                                   },
                               },
                               out.scheme);
    if (!ok) {
        throw ConfigError("parameter '" + name + "' does not belong to scheme '" + scheme_tag(config.scheme) + "'");
    }
    return out;
}

Potential make_potential(const std::string& spec)
{
    if (spec == "gauss" || spec == "gauss_barrier") {
        return Potential::gauss_barrier();
    }
    if (spec == "dwell" || spec == "double_well") {
        return Potential::double_well();
    }
    if (spec == "rtd") {
        return make_rtd_like_tabulated(24001, Interval(-30.0, 30.0));
    }
    if (spec.rfind("file:", 0) == 0) {
        return load_tabulated(spec.substr(5));
    }
    throw ConfigError("unknown potential '" + spec + "' (gauss, dwell, rtd, file:PATH)");
}

WignerState make_state(const std::string& spec)
{
    if (spec == "gauss" || spec == "gauss_packet") {
        return WignerState::gauss_packet();
    }
    if (spec.rfind("file:", 0) == 0) {
        return load_sampled(spec.substr(5));
    }
    throw ConfigError("unknown state '" + spec + "' (gauss, file:PATH)");
}

void validate(const ExperimentSpec& spec)
{
    validate(spec.scheme);
    if (!spec.sweep_param.empty()) {
        const auto allowed = sweep_parameters(spec.scheme.scheme);
        if (std::find(allowed.begin(), allowed.end(), spec.sweep_param) == allowed.end()) {
            throw ConfigError("sweep parameter '" + spec.sweep_param + "' does not belong to scheme '"
                              + scheme_tag(spec.scheme.scheme) + "'");
        }
    } else if (!spec.sweep_values.empty()) {
        throw ConfigError("sweep values given without a sweep parameter");
    }
    if (spec.nx < 2 || spec.nk < 2) {
        throw ConfigError("evaluation grid needs at least 2 x 2 points");
    }
    if (spec.format != "csv" && spec.format != "json") {
        throw ConfigError("format must be csv or json");
    }
    const bool gauss_potential = spec.potential == "gauss" || spec.potential == "gauss_barrier";
    const bool gauss_state = spec.state == "gauss" || spec.state == "gauss_packet";
    const bool polynomial = spec.potential == "dwell" || spec.potential == "double_well";
    if (spec.oracle == OracleKind::analytic && !(gauss_potential && gauss_state)) {
        throw ConfigError("the analytic oracle needs the Gauss barrier and the Gauss packet");
    }
    if (spec.oracle == OracleKind::moyal && !polynomial) {
        throw ConfigError("the moyal oracle needs a polynomial potential");
    }
}

GridSamples oracle_samples(const ExperimentSpec& spec, const WignerState& state, const Potential& potential)
{
    const PhaseGrid grid = PhaseGrid::uniform(spec.x_domain, spec.k_domain, spec.nx, spec.nk);
    const double hbar = spec.scheme.hbar;
    switch (spec.oracle) {
    case OracleKind::analytic:
        return sample_reference(grid, [&](double x, double k) {
            return gauss_barrier_reference(x, k, QuadratureSpec{32, 2.0}, 10.0, hbar);
        });
    case OracleKind::moyal: {
        const DoubleWell* w = potential.as_double_well();
        if (w == nullptr) {
            throw ConfigError("the moyal oracle needs a polynomial potential");
        }
        return sample_reference(grid, [&](double x, double k) {
            return double_well_reference(state, x, k, w->a, w->b, hbar);
        });
    }
    case OracleKind::brute_force: {
        BruteForceOptions opts = default_brute_force_options(potential);
        opts.k_domain = spec.k_domain;
        opts.hbar = hbar;
        return brute_force_field(state, potential, grid, opts);
    }
    }
    throw ConfigError("unknown oracle");
}

int covering_n_mu(double L_y, const Interval& k_domain)
{
    const double dk = two_pi / L_y;
    const double reach = std::max(std::abs(k_domain.lo()), std::abs(k_domain.hi()));
    return static_cast<int>(std::ceil(reach / dk - 1e-9));
}

std::vector<SweepRow> run_sweep(const ExperimentSpec& spec)
{
    validate(spec);
    std::vector<SweepRow> rows;
    if (spec.sweep_values.empty()) {
        return rows;
    }
    const Potential potential = make_potential(spec.potential);
    const WignerState state = make_state(spec.state);
    const PhaseGrid grid = PhaseGrid::uniform(spec.x_domain, spec.k_domain, spec.nx, spec.nk);
    const GridSamples oracle = oracle_samples(spec, state, potential);

    for (const double value : spec.sweep_values) {
        SweepRow row;
        row.param = value;
        const auto start = std::chrono::steady_clock::now();
        try {
            TruncationConfig config = with_parameter(spec.scheme, spec.sweep_param, value);
            if (auto* y = std::get_if<YConfig>(&config.scheme); y != nullptr && y->N_mu == 0) {
                y->N_mu = covering_n_mu(y->L_y, spec.k_domain);
            }
            const PsiDoField field = evaluate(state, potential, grid, config);
            const ErrorReport report = linf_error(field, oracle);
            row.eps_inf = report.eps_inf;
            row.realness_defect = field.realness_defect;
            if (const auto* k = std::get_if<KConfig>(&config.scheme)) {
                row.estimator = g_xi_estimate(state, potential, grid, *k);
            } else if (const auto* f = std::get_if<FConfig>(&config.scheme); f != nullptr && f->N_nu >= 1) {
                row.estimator = g_nu_estimate(potential, *f);
            }
        } catch (const Error& e) {
            row.error = e.what();
        }
        row.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        rows.push_back(std::move(row));
    }
    return rows;
}

double y_window_edge_value(const Potential& p, double L_y)
{
    const double y = 0.25 * L_y;
    return std::max(std::abs(p.value(y)), std::abs(p.value(-y)));
}

SchemeKind parse_scheme_kind(const std::string& tag)
{
    if (tag == "y") {
        return SchemeKind::y;
    }
    if (tag == "k") {
        return SchemeKind::k;
    }
    if (tag == "m") {
        return SchemeKind::m;
    }
    if (tag == "f") {
        return SchemeKind::f;
    }
    throw ConfigError("unknown scheme '" + tag + "' (y, k, m, f)");
}

namespace {

constexpr int max_terms = 400;
constexpr double max_window = 200.0;

Advice advise_y(const Potential& p, const WignerState& s, const Interval& x_domain, const Interval& k_domain,
                double target)
{
    Advice advice{TruncationConfig{YConfig{}}, {}, std::nullopt};
    auto& cfg = std::get<YConfig>(advice.config.scheme);
    if (p.is_zero()) {
        cfg.L_y = 2.0;
        cfg.N_mu = 0;
        advice.estimate = 0.0;
        return advice;
    }
    if (const DoubleWell* w = p.as_double_well()) {
        advice.warnings.push_back("the edge-value criterion does not apply to an unbounded potential; "
                                  "scanning eps_inf against the Moyal oracle on a 101 x 101 grid");
        const PhaseGrid grid = PhaseGrid::uniform(x_domain, k_domain, 101, 101);
        const GridSamples oracle = sample_reference(
            grid, [&](double x, double k) { return double_well_reference(s, x, k, w->a, w->b); });
        double best = std::numeric_limits<double>::infinity();
        double best_l = 2.0;
        for (double L = 2.0; L <= 80.0; L += 2.0) {
            const YConfig trial{L, covering_n_mu(L, k_domain), {}};
            const double eps = linf_error(y_truncation(s, p, grid, trial), oracle).eps_inf;
            if (eps < best) {
                best = eps;
                best_l = L;
            }
            if (eps <= target) {
                break;
            }
        }
        if (best > target) {
            advice.warnings.push_back("target not reached; returning the window with the smallest error ("
                                      + std::to_string(best) + ")");
        }
        cfg.L_y = best_l;
        cfg.N_mu = covering_n_mu(best_l, k_domain);
        advice.estimate = best;
        return advice;
    }
    double L = 2.0;
    double edge = 0.0;
    for (; L <= max_window; L += 2.0) {
        try {
            edge = y_window_edge_value(p, L);
        } catch (const DomainError&) {
            advice.warnings.push_back("window reaches past the tabulated samples at L_y = " + std::to_string(L));
            L -= 2.0;
            break;
        }
        if (edge <= target) {
            break;
        }
    }
    if (edge > target) {
        advice.warnings.push_back("edge value target not reached; L_y capped at " + std::to_string(L));
    }
    cfg.L_y = std::clamp(L, 2.0, max_window);
    cfg.N_mu = covering_n_mu(cfg.L_y, k_domain);
    advice.estimate = edge;
    return advice;
}

Advice advise_k(const Potential& p, const WignerState& s, const Interval& x_domain, const Interval& k_domain,
                double target)
{
    KConfig cfg;
    cfg.L_k = 2.0 * std::max(std::abs(k_domain.lo()), std::abs(k_domain.hi()));
    Advice advice{TruncationConfig{cfg}, {}, std::nullopt};
    auto& out = std::get<KConfig>(advice.config.scheme);
    if (p.is_zero()) {
        out.N_xi = 0;
        advice.estimate = 0.0;
        return advice;
    }
    const PhaseGrid grid = PhaseGrid::uniform(x_domain, k_domain);
    for (int n = 1; n <= max_terms; ++n) {
        out.N_xi = n;
        const double g = g_xi_estimate(s, p, grid, out);
        advice.estimate = g;
        if (g <= target) {
            return advice;
        }
    }
    advice.warnings.push_back("g_xi target not reached by N_xi = " + std::to_string(max_terms));
    return advice;
}

Advice advise_f(const Potential& p, const Interval& x_domain, double target)
{
    FConfig cfg;
    cfg.x_domain = x_domain;
    Advice advice{TruncationConfig{cfg}, {}, std::nullopt};
    auto& out = std::get<FConfig>(advice.config.scheme);
    if (p.is_zero()) {
        out.N_nu = 0;
        advice.estimate = 0.0;
        return advice;
    }
    for (int n = 1; n <= max_terms; ++n) {
        out.N_nu = n;
        const double g = g_nu_estimate(p, out);
        advice.estimate = g;
        if (g <= target) {
            return advice;
        }
    }
    advice.warnings.push_back("g_nu target not reached by N_nu = " + std::to_string(max_terms));
    return advice;
}

Advice advise_m(const Potential& p)
{
    const auto degree = p.polynomial_degree();
    if (!degree) {
        throw UnsupportedError("the Moyal series does not converge for potential '" + p.name()
                               + "' (no trend of convergence in P); use the k-scheme instead");
    }
    // Odd derivatives up to the degree: terms l = 0 .. floor((d - 1) / 2).
    const int P = *degree >= 1 ? (*degree - 1) / 2 : 0;
    return Advice{TruncationConfig{MConfig{P}}, {}, 0.0};
}

} // namespace

Advice advise_parameters(const Potential& p, const WignerState& s, const Interval& x_domain,
                         const Interval& k_domain, SchemeKind kind, double target_eps)
{
    if (!(target_eps > 0.0)) {
        throw ConfigError("target must be positive");
    }
    switch (kind) {
    case SchemeKind::y: return advise_y(p, s, x_domain, k_domain, target_eps);
    case SchemeKind::k: return advise_k(p, s, x_domain, k_domain, target_eps);
    case SchemeKind::m: return advise_m(p);
    case SchemeKind::f: return advise_f(p, x_domain, target_eps);
    }
    throw ConfigError("unknown scheme");
}

} // namespace psido
