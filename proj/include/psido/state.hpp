#pragma once

#include "psido/grid.hpp"

#include <complex>
#include <filesystem>
#include <functional>
#include <optional>
#include <variant>
#include <vector>

namespace psido {

// f(x0, k) at a fixed position x0. Operators evaluate the state row by row,
// so the x-dependent part of the work is paid once per row.
class KSlice {
public:
    struct Gaussian {
        double amplitude; // exp(-x0^2/4)/pi
    };
    // Real trigonometric series  c0 + 2 Re sum_{m>=1} c_m exp(i m omega (k - origin)).
    struct Spectral {
        double origin;
        double omega;
        std::vector<std::complex<double>> coeffs; // m = 0..M, Nyquist term already halved
    };

    explicit KSlice(Gaussian g) : rep_(g) {}
    explicit KSlice(Spectral s) : rep_(std::move(s)) {}

    [[nodiscard]] double value(double k) const;
    [[nodiscard]] double derivative(double k, int order) const;

private:
    std::variant<Gaussian, Spectral> rep_;
};

struct GaussPacket {};

/**
 * Samples on a closed x-grid times a periodic k-grid (row-major, x outer).
 * Each x-row carries its discrete Fourier coefficients so k can be evaluated
 * anywhere by trigonometric interpolation, including the half-shifted points
 * k +- k'/2 the force-spectrum scheme needs. Off-grid x uses a local Lagrange
 * stencil on the coefficient rows.
 */
struct SampledState {
    UniformGrid x_grid;
    UniformGrid k_grid;
    std::vector<double> values;
    std::vector<std::complex<double>> coeffs; // (M + 1) per x-row
    std::size_t modes = 0;                    // M + 1

    [[nodiscard]] double sample(std::size_t ix, std::size_t ik) const { return values[ix * k_grid.size() + ik]; }
};

class WignerState {
public:
    // f(x, k) = exp(-x^2/4 - 4 k^2) / pi
    static WignerState gauss_packet();
    static WignerState sampled(UniformGrid x_grid, UniformGrid k_grid, std::vector<double> values);
    static WignerState sampled_from(const std::function<double(double, double)>& fn,
                                    UniformGrid x_grid, UniformGrid k_grid);

    [[nodiscard]] double eval(double x, double k) const { return slice(x).value(k); }
    [[nodiscard]] double k_derivative(double x, double k, int order) const;
    [[nodiscard]] KSlice slice(double x) const;

    // Characteristic k-scale; 1/(2 sqrt 2) for the Gauss packet.
    [[nodiscard]] double k_decay_width() const;
    // Range in k' that carries the state: its sampling period for sampled
    // states, otherwise `k_domain` padded by three decay widths.
    [[nodiscard]] Interval k_support(const Interval& k_domain) const;

    [[nodiscard]] const SampledState* as_sampled() const noexcept { return std::get_if<SampledState>(&rep_); }
    [[nodiscard]] bool is_gauss_packet() const noexcept { return std::holds_alternative<GaussPacket>(rep_); }

private:
    explicit WignerState(std::variant<GaussPacket, SampledState> rep) : rep_(std::move(rep)) {}

    std::variant<GaussPacket, SampledState> rep_;
};

// Plain text: "nx nk xlo xhi klo khi" then nx rows of nk values.
void save_sampled(const WignerState& state, const std::filesystem::path& path);
WignerState load_sampled(const std::filesystem::path& path);

} // namespace psido
