#pragma once

#include "psido/grid.hpp"
#include "psido/operators.hpp"
#include "psido/potential.hpp"
#include "psido/state.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace psido {

// Closed-form kernel integral for the Gauss barrier and Gauss packet:
// (4 / (hbar pi sqrt(2 pi))) int_{-k_cut}^{k_cut} exp(-2(k-k')^2) sin(2(k-k')x) exp(-x^2/4 - 4k'^2) dk'
double gauss_barrier_reference(double x, double k, const QuadratureSpec& quad = {32, 2.0},
                               double k_cut = 10.0, double hbar = 1.0);

// Terminating Moyal form for V = a (x^2 - b^2)^2:
// 4a(x^3 - b^2 x) d_k f / hbar - a x d_k^3 f / hbar
double double_well_reference(const WignerState& state, double x, double k, double a = 1.0,
                             double b = 2.0, double hbar = 1.0);

struct BruteForceOptions {
    double y_cut = 30.0;
    QuadratureSpec y_quad{32, 1.0};
    // k'-rule; when unset the panel density follows y_cut so the oscillating
    // factor exp(i k' y) stays resolved.
    std::optional<QuadratureSpec> k_quad{};
    Interval k_domain{-two_pi, two_pi};
    double hbar = 1.0;
    // Largest change allowed under 2x refinement of both rules.
    double tolerance = 1e-10;
};

// y_cut = 50 for polynomial potentials, 30 otherwise.
BruteForceOptions default_brute_force_options(const Potential& p);

/**
 * Dense double quadrature of the untruncated term
 *   int dk' f(x, k') V_w(x, k - k'),  V_w(x, q) = (1/(2 pi i hbar)) int_{-y_cut}^{y_cut} exp(-i q y) D_V(x, y) dy
 * over the state's k-support. The point version re-evaluates with both rules
 * refined 2x and throws AccuracyError if the two results differ by more than
 * the tolerance.
 */
double brute_force_reference(const WignerState& state, const Potential& p, double x, double k,
                             const BruteForceOptions& opts);

// Refinement delta of the point oracle without throwing.
struct BruteForceCheck {
    double value;
    double refined;
    [[nodiscard]] double delta() const;
};
BruteForceCheck brute_force_check(const WignerState& state, const Potential& p, double x, double k,
                                  const BruteForceOptions& opts);

struct GridSamples {
    PhaseGrid grid;
    std::vector<double> values; // row-major, x outer

    [[nodiscard]] double at(std::size_t ix, std::size_t ik) const { return values[ix * grid.k.size() + ik]; }
};

// The brute-force oracle over a whole grid (no refinement check).
GridSamples brute_force_field(const WignerState& state, const Potential& p, const PhaseGrid& grid,
                              const BruteForceOptions& opts);

GridSamples sample_reference(const PhaseGrid& grid, const std::function<double(double, double)>& fn);

struct ErrorReport {
    TruncationConfig config;
    double eps_inf = 0.0;
    double argmax_x = 0.0;
    double argmax_k = 0.0;
    std::optional<double> estimator{};
    double realness_defect = 0.0;
};

// max |oracle - Re(field)| over the field's grid.
ErrorReport linf_error(const PsiDoField& field, const std::function<double(double, double)>& oracle);
ErrorReport linf_error(const PsiDoField& field, const GridSamples& oracle);
// Same metric between two sampled fields on one grid.
double linf_error(const GridSamples& a, const GridSamples& b);

} // namespace psido
