#include "psido/operators.hpp"

#include "psido/errors.hpp"
#include "detail.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace psido {

using detail::overloaded;
using cplx = std::complex<double>;

namespace {

constexpr cplx minus_i{0.0, -1.0};

void require_positive(double v, const char* what)
{
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw ConfigError(std::string(what) + " must be positive");
    }
}

void require_count(int v, const char* what)
{
    if (v < 0) {
        throw ConfigError(std::string(what) + " must be >= 0");
    }
}

void require_quad(const QuadratureSpec& q)
{
    if (q.order < 1) {
        throw ConfigError("quadrature order must be >= 1");
    }
    require_positive(q.panels_per_unit, "quadrature panel density");
}

double realness(const std::vector<cplx>& values)
{
    double defect = 0.0;
    for (const cplx& v : values) {
        defect = std::max(defect, std::abs(v.imag()));
    }
    return defect;
}

PsiDoField make_field(const PhaseGrid& grid, Scheme scheme, double hbar)
{
    return PsiDoField{grid, std::vector<cplx>(grid.size()), TruncationConfig{std::move(scheme), hbar}, 0.0};
}

// table[r * cols + c] = exp(i * sign * a_r * b_c)
std::vector<cplx> phase_table(const std::vector<double>& a, std::span<const double> b, double sign)
{
    std::vector<cplx> table(a.size() * b.size());
    for (std::size_t r = 0; r < a.size(); ++r) {
        for (std::size_t c = 0; c < b.size(); ++c) {
            table[r * b.size() + c] = std::polar(1.0, sign * a[r] * b[c]);
        }
    }
    return table;
}

} // namespace

std::string scheme_tag(const Scheme& scheme)
{
    return std::visit(overloaded{
                          [](const YConfig&) { return std::string("y"); },
                          [](const KConfig&) { return std::string("k"); },
                          [](const MConfig&) { return std::string("m"); },
                          [](const FConfig&) { return std::string("f"); },
                      },
                      scheme);
}

std::string describe(const TruncationConfig& config)
{
    std::ostringstream out;
    out.precision(17);
    out << "scheme=" << scheme_tag(config.scheme) << '\n';
    std::visit(overloaded{
                   [&](const YConfig& c) {
                       out << "L_y=" << c.L_y << "\nN_mu=" << c.N_mu << "\nquad_order=" << c.quad.order
                           << "\nquad_ppu=" << c.quad.panels_per_unit << '\n';
                   },
                   [&](const KConfig& c) {
                       out << "L_k=" << c.L_k << "\nN_xi=" << c.N_xi << "\nquad_order=" << c.quad.order
                           << "\nquad_ppu=" << c.quad.panels_per_unit << '\n';
                   },
                   [&](const MConfig& c) { out << "P=" << c.P << '\n'; },
                   [&](const FConfig& c) {
                       out << "N_nu=" << c.N_nu << "\nf_xdomain=" << c.x_domain.lo() << ','
                           << c.x_domain.hi() << "\nquad_order=" << c.quad.order
                           << "\nquad_ppu=" << c.quad.panels_per_unit << '\n';
                   },
               },
               config.scheme);
    out << "hbar=" << config.hbar << '\n';
    return out.str();
}

void validate(const TruncationConfig& config)
{
    require_positive(config.hbar, "hbar");
    std::visit(overloaded{
                   [](const YConfig& c) {
                       require_positive(c.L_y, "L_y");
                       require_count(c.N_mu, "N_mu");
                       require_quad(c.quad);
                   },
                   [](const KConfig& c) {
                       require_positive(c.L_k, "L_k");
                       require_count(c.N_xi, "N_xi");
                       require_quad(c.quad);
                   },
                   [](const MConfig& c) { require_count(c.P, "P"); },
                   [](const FConfig& c) {
                       require_count(c.N_nu, "N_nu");
                       require_quad(c.quad);
                   },
               },
               config.scheme);
}

double PsiDoField::max_abs_real() const
{
    double m = 0.0;
    for (const cplx& v : values) {
        m = std::max(m, std::abs(v.real()));
    }
    return m;
}

PsiDoField y_truncation(const WignerState& state, const Potential& potential, const PhaseGrid& grid,
                        const YConfig& cfg, double hbar)
{
    validate({cfg, hbar});
    const double dk = two_pi / cfg.L_y;
    const QuadratureRule rule = cfg.quad.over(Interval::symmetric(0.5 * cfg.L_y));
    const auto y = rule.nodes();
    const auto w = rule.weights();
    const std::size_t ny = y.size();

    std::vector<double> k_mu;
    for (int mu = -cfg.N_mu; mu <= cfg.N_mu; ++mu) {
        k_mu.push_back(mu * dk);
    }
    const std::size_t nmu = k_mu.size();
    const std::vector<double> ks = grid.k.points();
    const std::vector<cplx> out_phase = phase_table(ks, y, -1.0);  // exp(-i k y)
    const std::vector<cplx> in_phase = phase_table({y.begin(), y.end()}, k_mu, 1.0); // exp(i k_mu y)

    PsiDoField field = make_field(grid, cfg, hbar);
    const cplx prefactor = minus_i * dk / (two_pi * hbar);
    std::vector<double> f_mu(nmu);
    std::vector<cplx> a(ny);
    for (std::size_t ix = 0; ix < grid.x.size(); ++ix) {
        const double x = grid.x.point(ix);
        const KSlice f = state.slice(x);
        for (std::size_t m = 0; m < nmu; ++m) {
            f_mu[m] = f.value(k_mu[m]);
        }
        // a_n = w_n D_V(x, y_n) sum_mu f(x, k_mu) exp(i k_mu y_n)
        for (std::size_t n = 0; n < ny; ++n) {
            cplx rho{};
            const cplx* row = in_phase.data() + n * nmu;
            for (std::size_t m = 0; m < nmu; ++m) {
                rho += f_mu[m] * row[m];
            }
            a[n] = w[n] * potential.dv(x, y[n]) * rho;
        }
        for (std::size_t ik = 0; ik < ks.size(); ++ik) {
            cplx sum{};
            const cplx* row = out_phase.data() + ik * ny;
            for (std::size_t n = 0; n < ny; ++n) {
                sum += row[n] * a[n];
            }
            field.values[ix * ks.size() + ik] = prefactor * sum;
        }
    }
    field.realness_defect = realness(field.values);
    return field;
}

namespace {

void require_k_window(const PhaseGrid& grid, const KConfig& cfg)
{
    const double half = 0.5 * cfg.L_k * (1.0 + 1e-12);
    if (grid.k.interval().lo() < -half || grid.k.interval().hi() > half) {
        throw ConfigError("K-truncation needs the evaluation k-domain inside [-L_k/2, L_k/2]");
    }
}

// m(x, y_xi) = int_{-L_k/2}^{L_k/2} f(x, k') exp(i k' y_xi) dk' for each listed xi.
class KMoments {
public:
    KMoments(const KConfig& cfg, std::vector<int> xis)
        : rule_(cfg.quad.over(Interval::symmetric(0.5 * cfg.L_k))), xis_(std::move(xis))
    {
        const double dy = two_pi / cfg.L_k;
        for (const int xi : xis_) {
            ys_.push_back(xi * dy);
        }
        table_ = phase_table(ys_, rule_.nodes(), 1.0);
        wf_.resize(rule_.size());
    }

    [[nodiscard]] const std::vector<double>& ys() const noexcept { return ys_; }

    void compute(const KSlice& f, std::vector<cplx>& out)
    {
        const auto nodes = rule_.nodes();
        const auto weights = rule_.weights();
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            wf_[i] = weights[i] * f.value(nodes[i]);
        }
        out.assign(ys_.size(), cplx{});
        for (std::size_t r = 0; r < ys_.size(); ++r) {
            const cplx* row = table_.data() + r * wf_.size();
            cplx sum{};
            for (std::size_t i = 0; i < wf_.size(); ++i) {
                sum += wf_[i] * row[i];
            }
            out[r] = sum;
        }
    }

private:
    QuadratureRule rule_;
    std::vector<int> xis_;
    std::vector<double> ys_;
    std::vector<cplx> table_;
    std::vector<double> wf_;
};

} // namespace

PsiDoField k_truncation(const WignerState& state, const Potential& potential, const PhaseGrid& grid,
                        const KConfig& cfg, double hbar)
{
    validate({cfg, hbar});
    require_k_window(grid, cfg);
    const double dy = two_pi / cfg.L_k;

    // xi = 0 drops out: D_V(x, 0) = 0.
    std::vector<int> xis;
    for (int xi = -cfg.N_xi; xi <= cfg.N_xi; ++xi) {
        if (xi != 0) {
            xis.push_back(xi);
        }
    }
    KMoments moments(cfg, xis);
    const std::vector<double>& ys = moments.ys();
    const std::vector<double> ks = grid.k.points();
    const std::vector<cplx> out_phase = phase_table(ks, ys, -1.0);

    PsiDoField field = make_field(grid, cfg, hbar);
    const cplx prefactor = minus_i * dy / (two_pi * hbar);
    std::vector<cplx> m;
    std::vector<cplx> b(ys.size());
    for (std::size_t ix = 0; ix < grid.x.size(); ++ix) {
        const double x = grid.x.point(ix);
        moments.compute(state.slice(x), m);
        for (std::size_t r = 0; r < ys.size(); ++r) {
            b[r] = potential.dv(x, ys[r]) * m[r];
        }
        for (std::size_t ik = 0; ik < ks.size(); ++ik) {
            cplx sum{};
            const cplx* row = out_phase.data() + ik * ys.size();
            for (std::size_t r = 0; r < ys.size(); ++r) {
                sum += row[r] * b[r];
            }
            field.values[ix * ks.size() + ik] = prefactor * sum;
        }
    }
    field.realness_defect = realness(field.values);
    return field;
}

double g_xi_estimate(const WignerState& state, const Potential& potential, const PhaseGrid& grid,
                     const KConfig& cfg)
{
    validate({cfg, 1.0});
    require_k_window(grid, cfg);
    if (cfg.N_xi == 0) {
        return 0.0; // D_V(x, 0) = 0
    }
    const double dy = two_pi / cfg.L_k;
    KMoments moments(cfg, {cfg.N_xi});
    const double y_n = moments.ys().front();
    std::vector<cplx> m;
    double g = 0.0;
    // |exp(-i k y_N)| = 1, so the maximum over k is attained on every k-row.
    for (std::size_t ix = 0; ix < grid.x.size(); ++ix) {
        const double x = grid.x.point(ix);
        moments.compute(state.slice(x), m);
        g = std::max(g, dy * std::abs(potential.dv(x, y_n) * m.front()));
    }
    return g;
}

PsiDoField m_truncation(const WignerState& state, const Potential& potential, const PhaseGrid& grid,
                        const MConfig& cfg, double hbar)
{
    validate({cfg, hbar});
    const int terms = cfg.P + 1;
    // (-1)^l / (hbar 4^l (2l+1)!)
    std::vector<double> coeff(terms);
    double factorial = 1.0;
    for (int l = 0; l < terms; ++l) {
        if (l > 0) {
            factorial *= (2.0 * l) * (2.0 * l + 1.0);
        }
        coeff[l] = (l % 2 == 0 ? 1.0 : -1.0) / (hbar * std::pow(4.0, l) * factorial);
    }

    PsiDoField field = make_field(grid, cfg, hbar);
    const std::vector<double> ks = grid.k.points();
    std::vector<double> dV(terms);
    for (std::size_t ix = 0; ix < grid.x.size(); ++ix) {
        const double x = grid.x.point(ix);
        for (int l = 0; l < terms; ++l) {
            dV[l] = coeff[l] * potential.derivative(x, 2 * l + 1);
        }
        const KSlice f = state.slice(x);
        for (std::size_t ik = 0; ik < ks.size(); ++ik) {
            double sum = 0.0;
            for (int l = 0; l < terms; ++l) {
                if (dV[l] != 0.0) {
                    sum += dV[l] * f.derivative(ks[ik], 2 * l + 1);
                }
            }
            field.values[ix * ks.size() + ik] = sum;
        }
    }
    field.realness_defect = 0.0;
    return field;
}

PsiDoField f_truncation(const WignerState& state, const Potential& potential, const PhaseGrid& grid,
                        const FConfig& cfg, double hbar)
{
    validate({cfg, hbar});
    const double dk = two_pi / cfg.x_domain.length();
    const QuadratureRule rule = cfg.quad.over(cfg.x_domain);
    const int n = cfg.N_nu;

    std::vector<double> wavenumbers;
    for (int nu = -n; nu <= n; ++nu) {
        wavenumbers.push_back(nu * dk);
    }
    const ForceSpectrum spectrum = force_spectrum(potential, cfg.x_domain, wavenumbers, rule);
    const cplx f0 = spectrum.values[static_cast<std::size_t>(n)];

    PsiDoField field = make_field(grid, cfg, hbar);
    const double prefactor = dk / (two_pi * hbar);
    const std::vector<double> ks = grid.k.points();
    const std::size_t nterms = wavenumbers.size();
    std::vector<cplx> c(nterms);
    std::vector<double> shifted(nterms);
    for (std::size_t ix = 0; ix < grid.x.size(); ++ix) {
        const double x = grid.x.point(ix);
        // c_nu = F~(k'_nu) exp(i k'_nu x) / k'_nu
        for (std::size_t j = 0; j < nterms; ++j) {
            c[j] = j == static_cast<std::size_t>(n)
                       ? cplx{}
                       : spectrum.values[j] * std::polar(1.0, wavenumbers[j] * x) / wavenumbers[j];
        }
        const KSlice f = state.slice(x);
        for (std::size_t ik = 0; ik < ks.size(); ++ik) {
            const double k = ks[ik];
            // shifted[j] = f(x, k + k'_nu / 2); the nu and -nu terms share these samples.
            for (std::size_t j = 0; j < nterms; ++j) {
                shifted[j] = f.value(k + 0.5 * wavenumbers[j]);
            }
            cplx sum = f0 * f.derivative(k, 1);
            for (std::size_t j = 0; j < nterms; ++j) {
                if (j != static_cast<std::size_t>(n)) {
                    sum += c[j] * (shifted[j] - shifted[nterms - 1 - j]);
                }
            }
            field.values[ix * ks.size() + ik] = -prefactor * sum;
        }
    }
    field.realness_defect = realness(field.values);
    return field;
}

double g_nu_estimate(const Potential& potential, const FConfig& cfg)
{
    validate({cfg, 1.0});
    if (cfg.N_nu < 1) {
        throw ConfigError("g_nu needs N_nu >= 1");
    }
    const double dk = two_pi / cfg.x_domain.length();
    const double k_n = cfg.N_nu * dk;
    const cplx ft = potential.force_spectrum(cfg.x_domain, k_n, cfg.quad.over(cfg.x_domain));
    return std::abs(dk * ft / k_n);
}

PsiDoField evaluate(const WignerState& state, const Potential& potential, const PhaseGrid& grid,
                    const TruncationConfig& config)
{
    return std::visit(overloaded{
                          [&](const YConfig& c) { return y_truncation(state, potential, grid, c, config.hbar); },
                          [&](const KConfig& c) { return k_truncation(state, potential, grid, c, config.hbar); },
                          [&](const MConfig& c) { return m_truncation(state, potential, grid, c, config.hbar); },
                          [&](const FConfig& c) { return f_truncation(state, potential, grid, c, config.hbar); },
                      },
                      config.scheme);
}

} // namespace psido
