#pragma once

#include "psido/grid.hpp"
#include "psido/potential.hpp"
#include "psido/state.hpp"

#include <complex>
#include <string>
#include <variant>
#include <vector>

namespace psido {

// Evaluation grid over X x K; 201 x 201 closed grids by default.
struct PhaseGrid {
    UniformGrid x;
    UniformGrid k;

    static PhaseGrid uniform(const Interval& x_domain, const Interval& k_domain,
                             std::size_t nx = 201, std::size_t nk = 201)
    {
        return {UniformGrid(x_domain, nx), UniformGrid(k_domain, nk)};
    }
    [[nodiscard]] std::size_t size() const noexcept { return x.size() * k.size(); }
};

// Y-truncation: y-window [-L_y/2, L_y/2], k-lattice mu = -N_mu..N_mu with dk = 2 pi / L_y.
struct YConfig {
    double L_y = 40.0;
    int N_mu = 40;
    QuadratureSpec quad{};
};

// K-truncation: k'-window [-L_k/2, L_k/2], y-lattice xi = -N_xi..N_xi with dy = 2 pi / L_k.
struct KConfig {
    double L_k = 4.0 * std::numbers::pi;
    int N_xi = 40;
    QuadratureSpec quad{};
};

// M-truncation: Moyal terms l = 0..P.
struct MConfig {
    int P = 0;
};

// F-truncation: force spectrum over x_domain, lattice nu = -N_nu..N_nu with dk = 2 pi / L_x.
struct FConfig {
    int N_nu = 30;
    Interval x_domain{-10.0, 10.0};
    QuadratureSpec quad{};
};

using Scheme = std::variant<YConfig, KConfig, MConfig, FConfig>;

struct TruncationConfig {
    Scheme scheme;
    double hbar = 1.0;
};

// "y", "k", "m" or "f".
[[nodiscard]] std::string scheme_tag(const Scheme& scheme);
// key=value lines describing the configuration.
[[nodiscard]] std::string describe(const TruncationConfig& config);
void validate(const TruncationConfig& config);

/**
 * Samples of the pseudo-differential term on an evaluation grid, row-major
 * with x as the outer index. Values are accumulated in complex arithmetic;
 * for a real state and potential the imaginary part is pure round-off and its
 * maximum modulus is kept as realness_defect.
 */
struct PsiDoField {
    PhaseGrid grid;
    std::vector<std::complex<double>> values;
    TruncationConfig config;
    double realness_defect = 0.0;

    [[nodiscard]] std::complex<double> at(std::size_t ix, std::size_t ik) const { return values[ix * grid.k.size() + ik]; }
    [[nodiscard]] double real(std::size_t ix, std::size_t ik) const { return at(ix, ik).real(); }
    [[nodiscard]] double max_abs_real() const;
};

PsiDoField y_truncation(const WignerState& state, const Potential& potential, const PhaseGrid& grid,
                        const YConfig& cfg, double hbar = 1.0);
PsiDoField k_truncation(const WignerState& state, const Potential& potential, const PhaseGrid& grid,
                        const KConfig& cfg, double hbar = 1.0);
PsiDoField m_truncation(const WignerState& state, const Potential& potential, const PhaseGrid& grid,
                        const MConfig& cfg, double hbar = 1.0);
PsiDoField f_truncation(const WignerState& state, const Potential& potential, const PhaseGrid& grid,
                        const FConfig& cfg, double hbar = 1.0);

PsiDoField evaluate(const WignerState& state, const Potential& potential, const PhaseGrid& grid,
                    const TruncationConfig& config);

// max over the grid of | dy * D_V(x, y_N) * int_K exp(-i (k - k') y_N) f(x, k') dk' |
double g_xi_estimate(const WignerState& state, const Potential& potential, const PhaseGrid& grid,
                     const KConfig& cfg);

// | dk * F~(k_N) / k_N |
double g_nu_estimate(const Potential& potential, const FConfig& cfg);

} // namespace psido
