#include "psido/reference.hpp"

#include "psido/errors.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

namespace psido {

using cplx = std::complex<double>;

double gauss_barrier_reference(double x, double k, const QuadratureSpec& quad, double k_cut, double hbar)
{
    const double prefactor = 4.0 / (hbar * std::numbers::pi * std::sqrt(two_pi));
    const double envelope = std::exp(-0.25 * x * x);
    const QuadratureRule rule = quad.over(Interval::symmetric(k_cut));
    const double integral = rule.integrate([&](double kp) {
        const double q = k - kp;
        return std::exp(-2.0 * q * q - 4.0 * kp * kp) * std::sin(2.0 * q * x);
    });
    return prefactor * envelope * integral;
}

double double_well_reference(const WignerState& state, double x, double k, double a, double b, double hbar)
{
    const KSlice f = state.slice(x);
    return (4.0 * a * (x * x * x - b * b * x) * f.derivative(k, 1) - a * x * f.derivative(k, 3)) / hbar;
}

BruteForceOptions default_brute_force_options(const Potential& p)
{
    BruteForceOptions opts;
    opts.y_cut = p.polynomial_degree() && !p.is_zero() ? 50.0 : 30.0;
    return opts;
}

namespace {

constexpr std::size_t table_limit = std::size_t{4} << 20;

class BruteForce {
public:
    BruteForce(const WignerState& state, const Potential& p, const BruteForceOptions& opts)
        : state_(state),
          potential_(p),
          hbar_(opts.hbar),
          y_rule_(opts.y_quad.over(Interval::symmetric(opts.y_cut))),
          k_rule_(k_spec(opts).over(state.k_support(opts.k_domain))),
          wf_(k_rule_.size()),
          m_(y_rule_.size())
    {
        if (!(opts.y_cut > 0.0)) {
            throw ConfigError("brute-force y_cut must be positive");
        }
        if (!(opts.hbar > 0.0)) {
            throw ConfigError("hbar must be positive");
        }
        const auto ys = y_rule_.nodes();
        const auto kps = k_rule_.nodes();
        if (ys.size() * kps.size() <= table_limit) {
            table_.resize(ys.size() * kps.size());
            for (std::size_t n = 0; n < ys.size(); ++n) {
                for (std::size_t i = 0; i < kps.size(); ++i) {
                    table_[n * kps.size() + i] = std::polar(1.0, kps[i] * ys[n]);
                }
            }
        }
    }

    // Fills m_n = w^y_n D_V(x, y_n) int f(x, k') exp(i k' y_n) dk'.
    void load_row(double x)
    {
        const KSlice f = state_.slice(x);
        const auto ys = y_rule_.nodes();
        const auto wy = y_rule_.weights();
        const auto kps = k_rule_.nodes();
        const auto wk = k_rule_.weights();
        for (std::size_t i = 0; i < kps.size(); ++i) {
            wf_[i] = wk[i] * f.value(kps[i]);
        }
        for (std::size_t n = 0; n < ys.size(); ++n) {
            const double d = potential_.dv(x, ys[n]);
            if (d == 0.0) {
                m_[n] = 0.0;
                continue;
            }
            cplx sum{};
            if (!table_.empty()) {
                const cplx* row = table_.data() + n * kps.size();
                for (std::size_t i = 0; i < kps.size(); ++i) {
                    sum += wf_[i] * row[i];
                }
            } else {
                for (std::size_t i = 0; i < kps.size(); ++i) {
                    sum += wf_[i] * std::polar(1.0, kps[i] * ys[n]);
                }
            }
            m_[n] = wy[n] * d * sum;
        }
    }

    [[nodiscard]] double at(double k) const
    {
        const auto ys = y_rule_.nodes();
        cplx sum{};
        for (std::size_t n = 0; n < ys.size(); ++n) {
            sum += std::polar(1.0, -k * ys[n]) * m_[n];
        }
        // 1/(2 pi i hbar) = -i/(2 pi hbar)
        return (cplx{0.0, -1.0} * sum).real() / (two_pi * hbar_);
    }

private:
    static QuadratureSpec k_spec(const BruteForceOptions& opts)
    {
        if (opts.k_quad) {
            return *opts.k_quad;
        }
        return {opts.y_quad.order, std::max(1.0, opts.y_cut / 25.0)};
    }

    const WignerState& state_;
    const Potential& potential_;
    double hbar_;
    QuadratureRule y_rule_;
    QuadratureRule k_rule_;
    std::vector<cplx> table_;
    std::vector<double> wf_;
    std::vector<cplx> m_;
};

BruteForceOptions refined(const BruteForceOptions& opts)
{
    BruteForceOptions r = opts;
    r.y_quad = opts.y_quad.refined();
    const QuadratureSpec k_base = opts.k_quad ? *opts.k_quad
                                              : QuadratureSpec{opts.y_quad.order, std::max(1.0, opts.y_cut / 25.0)};
    r.k_quad = k_base.refined();
    return r;
}

double point_value(const WignerState& state, const Potential& p, double x, double k, const BruteForceOptions& opts)
{
    BruteForce bf(state, p, opts);
    bf.load_row(x);
    return bf.at(k);
}

} // namespace

double BruteForceCheck::delta() const
{
    return std::abs(refined - value);
}

BruteForceCheck brute_force_check(const WignerState& state, const Potential& p, double x, double k,
                                  const BruteForceOptions& opts)
{
    return {point_value(state, p, x, k, opts), point_value(state, p, x, k, refined(opts))};
}

double brute_force_reference(const WignerState& state, const Potential& p, double x, double k,
                             const BruteForceOptions& opts)
{
    const BruteForceCheck check = brute_force_check(state, p, x, k, opts);
    if (check.delta() > opts.tolerance) {
        throw AccuracyError("brute-force oracle did not converge at (" + std::to_string(x) + ", "
                                + std::to_string(k) + "): refinement changed it by "
                                + std::to_string(check.delta()),
                            check.delta());
    }
    return check.value;
}

GridSamples brute_force_field(const WignerState& state, const Potential& p, const PhaseGrid& grid,
                              const BruteForceOptions& opts)
{
    BruteForce bf(state, p, opts);
    GridSamples out{grid, std::vector<double>(grid.size())};
    for (std::size_t ix = 0; ix < grid.x.size(); ++ix) {
        bf.load_row(grid.x.point(ix));
        for (std::size_t ik = 0; ik < grid.k.size(); ++ik) {
            out.values[ix * grid.k.size() + ik] = bf.at(grid.k.point(ik));
        }
    }
    return out;
}

GridSamples sample_reference(const PhaseGrid& grid, const std::function<double(double, double)>& fn)
{
    GridSamples out{grid, std::vector<double>(grid.size())};
    for (std::size_t ix = 0; ix < grid.x.size(); ++ix) {
        for (std::size_t ik = 0; ik < grid.k.size(); ++ik) {
            out.values[ix * grid.k.size() + ik] = fn(grid.x.point(ix), grid.k.point(ik));
        }
    }
    return out;
}

namespace {

void require_same_shape(const PhaseGrid& a, const PhaseGrid& b)
{
    if (a.x.size() != b.x.size() || a.k.size() != b.k.size() || !(a.x.interval() == b.x.interval())
        || !(a.k.interval() == b.k.interval())) {
        throw ConfigError("error metric needs both fields on the same grid");
    }
}

} // namespace

ErrorReport linf_error(const PsiDoField& field, const std::function<double(double, double)>& oracle)
{
    return linf_error(field, sample_reference(field.grid, oracle));
}

ErrorReport linf_error(const PsiDoField& field, const GridSamples& oracle)
{
    require_same_shape(field.grid, oracle.grid);
    ErrorReport report{field.config, 0.0, field.grid.x.point(0), field.grid.k.point(0), std::nullopt,
                       field.realness_defect};
    for (std::size_t ix = 0; ix < field.grid.x.size(); ++ix) {
        for (std::size_t ik = 0; ik < field.grid.k.size(); ++ik) {
            const double e = std::abs(oracle.at(ix, ik) - field.real(ix, ik));
            if (e > report.eps_inf) {
                report.eps_inf = e;
                report.argmax_x = field.grid.x.point(ix);
                report.argmax_k = field.grid.k.point(ik);
            }
        }
    }
    return report;
}

double linf_error(const GridSamples& a, const GridSamples& b)
{
    require_same_shape(a.grid, b.grid);
    double e = 0.0;
    for (std::size_t i = 0; i < a.values.size(); ++i) {
        e = std::max(e, std::abs(a.values[i] - b.values[i]));
    }
    return e;
}

} // namespace psido
