#include "psido/potential.hpp"

#include "psido/errors.hpp"
#include "detail.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace psido {

using detail::overloaded;

Potential Potential::gauss_barrier()
{
    return Potential(GaussBarrier{}, "gauss_barrier");
}

Potential Potential::double_well(double a, double b)
{
    if (!(a > 0.0)) {
        throw ConfigError("double well requires a > 0");
    }
    return Potential(DoubleWell{a, b}, "double_well");
}

Potential Potential::tabulated(std::vector<double> x, std::vector<double> v, std::string name)
{
    return Potential(Tabulated{CubicSpline(std::move(x), std::move(v))}, std::move(name));
}

double Potential::value(double x) const
{
    return std::visit(overloaded{
                          [&](const GaussBarrier&) { return std::exp(-0.5 * x * x); },
                          [&](const DoubleWell& w) {
                              const double s = x * x - w.b * w.b;
                              return w.a * s * s;
                          },
                          [&](const Tabulated& t) { return t.spline.value(x); },
                      },
                      kind_);
}

double Potential::derivative(double x, int order) const
{
    if (order < 0) {
        throw ConfigError("derivative order must be non-negative");
    }
    if (order == 0) {
        return value(x);
    }
    return std::visit(
        overloaded{
            [&](const GaussBarrier&) {
                // d^n/dx^n exp(-x^2/2) = (-1)^n He_n(x) exp(-x^2/2)
                const double sign = order % 2 == 0 ? 1.0 : -1.0;
                return sign * detail::hermite_he(order, x) * std::exp(-0.5 * x * x);
            },
            [&](const DoubleWell& w) {
                const double a = w.a;
                const double b2 = w.b * w.b;
                switch (order) {
                case 1: return a * (4.0 * x * x * x - 4.0 * b2 * x);
                case 2: return a * (12.0 * x * x - 4.0 * b2);
                case 3: return 24.0 * a * x;
                case 4: return 24.0 * a;
                default: return 0.0;
                }
            },
            [&](const Tabulated& t) -> double {
                if (order > 2) {
                    throw UnsupportedError("tabulated potential '" + name_ + "' has no derivative of order "
                                           + std::to_string(order)
                                           + " (only orders <= 2; Moyal terms beyond the classical "
                                             "force are unavailable)");
                }
                return t.spline.derivative(x, order);
            },
        },
        kind_);
}

std::complex<double> Potential::force_spectrum(const Interval& x_domain, double k,
                                               const QuadratureRule& quad) const
{
    return psido::force_spectrum(*this, x_domain, std::span<const double>(&k, 1), quad).values.front();
}

std::optional<int> Potential::polynomial_degree() const
{
    if (std::holds_alternative<DoubleWell>(kind_)) {
        return 4;
    }
    if (is_zero()) {
        return 0;
    }
    return std::nullopt;
}

bool Potential::is_zero() const
{
    const auto* t = std::get_if<Tabulated>(&kind_);
    if (t == nullptr) {
        return false;
    }
    const auto s = t->spline.samples();
    return std::all_of(s.begin(), s.end(), [](double v) { return v == 0.0; });
}

std::optional<Interval> Potential::sample_range() const
{
    if (const auto* t = std::get_if<Tabulated>(&kind_)) {
        return Interval(t->spline.lo(), t->spline.hi());
    }
    return std::nullopt;
}

ForceSpectrum force_spectrum(const Potential& p, const Interval& x_domain,
                             std::span<const double> wavenumbers, const QuadratureRule& quad)
{
    if (!(quad.interval() == x_domain)) {
        throw ConfigError("force spectrum quadrature must cover the x domain");
    }
    const auto nodes = quad.nodes();
    const auto weights = quad.weights();
    std::vector<double> wf(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        wf[i] = weights[i] * p.force(nodes[i]);
    }
    ForceSpectrum out{x_domain, {wavenumbers.begin(), wavenumbers.end()}, {}};
    out.values.reserve(wavenumbers.size());
    for (const double k : wavenumbers) {
        std::complex<double> sum{};
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            sum += wf[i] * std::polar(1.0, -k * nodes[i]);
        }
        out.values.push_back(sum);
    }
    return out;
}

double rtd_surrogate(double x)
{
    constexpr double height = 0.3;
    constexpr double centre = 1.5;
    constexpr double width = 0.5;
    const double l = (x + centre) / width;
    const double r = (x - centre) / width;
    return height * (std::exp(-0.5 * l * l) + std::exp(-0.5 * r * r));
}

Potential make_rtd_like_tabulated(std::size_t n_samples, const Interval& x_domain)
{
    if (n_samples < 64) {
        throw ConfigError("RTD surrogate needs at least 64 samples");
    }
    const UniformGrid grid(x_domain, n_samples);
    std::vector<double> xs = grid.points();
    std::vector<double> vs(xs.size());
    std::transform(xs.begin(), xs.end(), vs.begin(), rtd_surrogate);
    return Potential::tabulated(std::move(xs), std::move(vs), "rtd_surrogate");
}

Potential load_tabulated(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open potential file " + path.string());
    }
    std::vector<double> xs;
    std::vector<double> vs;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream row(line);
        double x = 0.0;
        double v = 0.0;
        if (!(row >> x)) {
            continue; // blank or comment-only line
        }
        if (!(row >> v)) {
            throw IoError(path.string() + ":" + std::to_string(line_no) + ": expected two columns");
        }
        xs.push_back(x);
        vs.push_back(v);
    }
    if (xs.size() < 4) {
        throw ConfigError(path.string() + ": tabulated potential needs at least 4 samples");
    }
    return Potential::tabulated(std::move(xs), std::move(vs), path.stem().string());
}

} // namespace psido
