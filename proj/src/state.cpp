#include "psido/state.hpp"

#include "psido/errors.hpp"
#include "detail.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <numbers>

namespace psido {

using detail::overloaded;

namespace {

constexpr double packet_k_scale = 2.8284271247461903; // sqrt(8): exp(-4k^2) = exp(-(sqrt8 k)^2/2)
constexpr std::size_t lagrange_points = 12;

std::complex<double> imaginary_power(int order)
{
    switch (order % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
    }
}

} // namespace

double KSlice::value(double k) const
{
    return std::visit(overloaded{
                          [&](const Gaussian& g) { return g.amplitude * std::exp(-4.0 * k * k); },
                          [&](const Spectral& s) {
                              const std::complex<double> z = std::polar(1.0, s.omega * (k - s.origin));
                              std::complex<double> zm = z;
                              std::complex<double> sum{};
                              for (std::size_t m = 1; m < s.coeffs.size(); ++m) {
                                  sum += s.coeffs[m] * zm;
                                  zm *= z;
                              }
                              return s.coeffs[0].real() + 2.0 * sum.real();
                          },
                      },
                      rep_);
}

double KSlice::derivative(double k, int order) const
{
    if (order < 0) {
        throw ConfigError("derivative order must be non-negative");
    }
    if (order == 0) {
        return value(k);
    }
    return std::visit(overloaded{
                          [&](const Gaussian& g) {
                              const double t = packet_k_scale * k;
                              const double scale = std::pow(-packet_k_scale, order);
                              return scale * detail::hermite_he(order, t) * g.amplitude
                                     * std::exp(-4.0 * k * k);
                          },
                          [&](const Spectral& s) {
                              const std::complex<double> z = std::polar(1.0, s.omega * (k - s.origin));
                              std::complex<double> zm = z;
                              std::complex<double> sum{};
                              for (std::size_t m = 1; m < s.coeffs.size(); ++m) {
                                  const double freq = static_cast<double>(m) * s.omega;
                                  sum += s.coeffs[m] * std::pow(freq, order) * zm;
                                  zm *= z;
                              }
                              return 2.0 * (imaginary_power(order) * sum).real();
                          },
                      },
                      rep_);
}

WignerState WignerState::gauss_packet()
{
    return WignerState(GaussPacket{});
}

WignerState WignerState::sampled(UniformGrid x_grid, UniformGrid k_grid, std::vector<double> values)
{
    if (x_grid.periodic()) {
        throw ConfigError("sampled state needs a closed x-grid");
    }
    if (!k_grid.periodic()) {
        throw ConfigError("sampled state needs a periodic k-grid");
    }
    const std::size_t nx = x_grid.size();
    const std::size_t nk = k_grid.size();
    if (values.size() != nx * nk) {
        throw ConfigError("sampled state: expected " + std::to_string(nx * nk) + " values, got "
                          + std::to_string(values.size()));
    }

    const std::size_t max_mode = nk / 2;
    const bool even = nk % 2 == 0;
    const std::size_t modes = max_mode + 1;
    std::vector<std::complex<double>> coeffs(nx * modes);
    // Direct DFT per row.
    std::vector<std::complex<double>> roots(nk);
    for (std::size_t j = 0; j < nk; ++j) {
        roots[j] = std::polar(1.0, -two_pi * static_cast<double>(j) / static_cast<double>(nk));
    }
    for (std::size_t ix = 0; ix < nx; ++ix) {
        const double* row = values.data() + ix * nk;
        for (std::size_t m = 0; m < modes; ++m) {
            std::complex<double> sum{};
            for (std::size_t j = 0; j < nk; ++j) {
                sum += row[j] * roots[(m * j) % nk];
            }
            sum /= static_cast<double>(nk);
            if (even && m == max_mode && m != 0) {
                sum *= 0.5;
            }
            coeffs[ix * modes + m] = sum;
        }
    }
    return WignerState(SampledState{std::move(x_grid), std::move(k_grid), std::move(values),
                                    std::move(coeffs), modes});
}

WignerState WignerState::sampled_from(const std::function<double(double, double)>& fn,
                                      UniformGrid x_grid, UniformGrid k_grid)
{
    std::vector<double> values;
    values.reserve(x_grid.size() * k_grid.size());
    for (std::size_t ix = 0; ix < x_grid.size(); ++ix) {
        for (std::size_t ik = 0; ik < k_grid.size(); ++ik) {
            values.push_back(fn(x_grid.point(ix), k_grid.point(ik)));
        }
    }
    return sampled(std::move(x_grid), std::move(k_grid), std::move(values));
}

KSlice WignerState::slice(double x) const
{
    return std::visit(
        overloaded{
            [&](const GaussPacket&) {
                return KSlice(KSlice::Gaussian{std::exp(-0.25 * x * x) / std::numbers::pi});
            },
            [&](const SampledState& s) {
                const Interval& xd = s.x_grid.interval();
                if (!xd.contains(x)) {
                    throw DomainError("sampled state evaluated at x=" + std::to_string(x)
                                      + " outside its x-domain");
                }
                KSlice::Spectral spec{s.k_grid.interval().lo(), two_pi / s.k_grid.interval().length(),
                                      std::vector<std::complex<double>>(s.modes)};
                const std::size_t nx = s.x_grid.size();
                const double h = s.x_grid.spacing();
                const double t = (x - xd.lo()) / h;
                const auto nearest = static_cast<std::size_t>(std::llround(t));
                if (std::abs(t - static_cast<double>(nearest)) < 1e-12) {
                    std::copy_n(s.coeffs.begin() + static_cast<std::ptrdiff_t>(nearest * s.modes), s.modes,
                                spec.coeffs.begin());
                    return KSlice(std::move(spec));
                }
                const std::size_t width = std::min(lagrange_points, nx);
                const auto cell = static_cast<std::ptrdiff_t>(std::floor(t));
                std::ptrdiff_t start = cell - static_cast<std::ptrdiff_t>(width / 2) + 1;
                start = std::clamp<std::ptrdiff_t>(start, 0, static_cast<std::ptrdiff_t>(nx - width));
                for (std::size_t a = 0; a < width; ++a) {
                    const double ta = static_cast<double>(start) + static_cast<double>(a);
                    double basis = 1.0;
                    for (std::size_t b = 0; b < width; ++b) {
                        if (b != a) {
                            const double tb = static_cast<double>(start) + static_cast<double>(b);
                            basis *= (t - tb) / (ta - tb);
                        }
                    }
                    const auto row = static_cast<std::size_t>(start) + a;
                    for (std::size_t m = 0; m < s.modes; ++m) {
                        spec.coeffs[m] += basis * s.coeffs[row * s.modes + m];
                    }
                }
                return KSlice(std::move(spec));
            },
        },
        rep_);
}

double WignerState::k_derivative(double x, double k, int order) const
{
    return slice(x).derivative(k, order);
}

double WignerState::k_decay_width() const
{
    if (is_gauss_packet()) {
        return 1.0 / (2.0 * std::numbers::sqrt2);
    }
    // RMS spread of |f| in k about its mean.
    const auto& s = std::get<SampledState>(rep_);
    double w = 0.0;
    double m1 = 0.0;
    double m2 = 0.0;
    for (std::size_t ix = 0; ix < s.x_grid.size(); ++ix) {
        for (std::size_t ik = 0; ik < s.k_grid.size(); ++ik) {
            const double a = std::abs(s.sample(ix, ik));
            const double k = s.k_grid.point(ik);
            w += a;
            m1 += a * k;
            m2 += a * k * k;
        }
    }
    if (w == 0.0) {
        return s.k_grid.interval().length();
    }
    m1 /= w;
    return std::sqrt(std::max(m2 / w - m1 * m1, 0.0));
}

Interval WignerState::k_support(const Interval& k_domain) const
{
    if (const auto* s = as_sampled()) {
        return s->k_grid.interval();
    }
    const double pad = 3.0 * k_decay_width();
    return {k_domain.lo() - pad, k_domain.hi() + pad};
}

void save_sampled(const WignerState& state, const std::filesystem::path& path)
{
    const auto* s = state.as_sampled();
    if (s == nullptr) {
        throw ConfigError("only sampled states can be saved");
    }
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot write " + path.string());
    }
    out << std::setprecision(17);
    out << s->x_grid.size() << ' ' << s->k_grid.size() << ' ' << s->x_grid.interval().lo() << ' '
        << s->x_grid.interval().hi() << ' ' << s->k_grid.interval().lo() << ' '
        << s->k_grid.interval().hi() << '\n';
    for (std::size_t ix = 0; ix < s->x_grid.size(); ++ix) {
        for (std::size_t ik = 0; ik < s->k_grid.size(); ++ik) {
            out << (ik == 0 ? "" : " ") << s->sample(ix, ik);
        }
        out << '\n';
    }
    if (!out) {
        throw IoError("failed writing " + path.string());
    }
}

WignerState load_sampled(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open state file " + path.string());
    }
    std::size_t nx = 0;
    std::size_t nk = 0;
    double xlo = 0.0;
    double xhi = 0.0;
    double klo = 0.0;
    double khi = 0.0;
    if (!(in >> nx >> nk >> xlo >> xhi >> klo >> khi)) {
        throw IoError(path.string() + ": malformed header, expected 'nx nk xlo xhi klo khi'");
    }
    std::vector<double> values(nx * nk);
    for (double& v : values) {
        if (!(in >> v)) {
            throw IoError(path.string() + ": expected " + std::to_string(nx * nk) + " values");
        }
    }
    return WignerState::sampled(UniformGrid(Interval(xlo, xhi), nx),
                                UniformGrid(Interval(klo, khi), nk, UniformGrid::Kind::periodic),
                                std::move(values));
}

} // namespace psido
