#pragma once

#include "psido/grid.hpp"
#include "psido/spline.hpp"

#include <complex>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace psido {

// V(x) = exp(-x^2/2)
struct GaussBarrier {};

// V(x) = a (x^2 - b^2)^2, a > 0
struct DoubleWell {
    double a = 1.0;
    double b = 2.0;
};

// Values at collocation points, natural cubic spline in between.
struct Tabulated {
    CubicSpline spline;
};

/**
 * Static potential V(x) and the quantities the truncation schemes consume:
 * the symmetrized difference D_V(x, y) = V(x + y/2) - V(x - y/2), x-derivatives,
 * the force F = -dV/dx and its Fourier transform over a bounded domain.
 */
class Potential {
public:
    static Potential gauss_barrier();
    static Potential double_well(double a = 1.0, double b = 2.0);
    static Potential tabulated(std::vector<double> x, std::vector<double> v,
                               std::string name = "tabulated");

    [[nodiscard]] const std::string& name() const noexcept { return name_; }

    [[nodiscard]] double value(double x) const;
    [[nodiscard]] double dv(double x, double y) const { return value(x + 0.5 * y) - value(x - 0.5 * y); }

    // d^order V / dx^order. Tabulated potentials stop at order 2.
    [[nodiscard]] double derivative(double x, int order) const;
    [[nodiscard]] double force(double x) const { return -derivative(x, 1); }

    // F~(k) = int_domain F(x) exp(-i k x) dx.
    [[nodiscard]] std::complex<double> force_spectrum(const Interval& x_domain, double k,
                                                      const QuadratureRule& quad) const;

    // Degree of the polynomial, if V is one.
    [[nodiscard]] std::optional<int> polynomial_degree() const;
    // True for a tabulated potential whose samples are all zero.
    [[nodiscard]] bool is_zero() const;
    // Sample range of a tabulated potential; nullopt for analytic kinds.
    [[nodiscard]] std::optional<Interval> sample_range() const;

    [[nodiscard]] bool is_gauss_barrier() const noexcept { return std::holds_alternative<GaussBarrier>(kind_); }
    [[nodiscard]] const DoubleWell* as_double_well() const noexcept { return std::get_if<DoubleWell>(&kind_); }
    [[nodiscard]] const Tabulated* as_tabulated() const noexcept { return std::get_if<Tabulated>(&kind_); }

private:
    using Kind = std::variant<GaussBarrier, DoubleWell, Tabulated>;
    Potential(Kind kind, std::string name) : kind_(std::move(kind)), name_(std::move(name)) {}

    Kind kind_;
    std::string name_;
};

// F~ sampled at a list of wavenumbers with one quadrature rule.
struct ForceSpectrum {
    Interval x_domain;
    std::vector<double> wavenumbers;
    std::vector<std::complex<double>> values;
};

ForceSpectrum force_spectrum(const Potential& p, const Interval& x_domain,
                             std::span<const double> wavenumbers, const QuadratureRule& quad);

// Closed form of the double-barrier surrogate: two Gaussian bumps of height 0.3
// and width 0.5 centred at x = -1.5 and x = 1.5.
double rtd_surrogate(double x);

// The surrogate sampled on a closed uniform grid over x_domain.
Potential make_rtd_like_tabulated(std::size_t n_samples, const Interval& x_domain);

// Two-column text file "x V" with '#' comments.
Potential load_tabulated(const std::filesystem::path& path);

} // namespace psido
