#pragma once

#include <cstddef>
#include <functional>
#include <numbers>
#include <span>
#include <vector>

namespace psido {

inline constexpr double two_pi = 2.0 * std::numbers::pi;

// Closed interval [lo, hi] with lo < hi.
class Interval {
public:
    Interval(double lo, double hi);

    static Interval symmetric(double half_length) { return {-half_length, half_length}; }

    [[nodiscard]] double lo() const noexcept { return lo_; }
    [[nodiscard]] double hi() const noexcept { return hi_; }
    [[nodiscard]] double length() const noexcept { return hi_ - lo_; }
    [[nodiscard]] double mid() const noexcept { return 0.5 * (lo_ + hi_); }
    [[nodiscard]] bool contains(double x) const noexcept { return x >= lo_ && x <= hi_; }

    friend bool operator==(const Interval&, const Interval&) = default;

private:
    double lo_;
    double hi_;
};

/**
 * Equally spaced points over an interval.
 *
 * Closed grids include both endpoints (spacing = length/(n-1)); periodic grids
 * omit the upper endpoint (spacing = length/n), which is the layout a discrete
 * Fourier series expects.
 */
class UniformGrid {
public:
    enum class Kind { closed, periodic };

    UniformGrid(Interval interval, std::size_t n_points, Kind kind = Kind::closed);

    [[nodiscard]] const Interval& interval() const noexcept { return interval_; }
    [[nodiscard]] std::size_t size() const noexcept { return n_; }
    [[nodiscard]] double spacing() const noexcept { return spacing_; }
    [[nodiscard]] Kind kind() const noexcept { return kind_; }
    [[nodiscard]] bool periodic() const noexcept { return kind_ == Kind::periodic; }

    // Symmetric closed grids return exact mirror values: point(i) == -point(n-1-i).
    [[nodiscard]] double point(std::size_t i) const noexcept;
    [[nodiscard]] std::vector<double> points() const;

private:
    Interval interval_;
    std::size_t n_;
    double spacing_;
    Kind kind_;
};

/**
 * Conjugate grid pair locked by L * dual_spacing = 2*pi.
 *
 * The primal grid is periodic over [-L/2, L/2) with 2*n_dual_half + 1 points,
 * i.e. the discrete-Fourier partner of the dual index set -n..n.
 */
struct DualGridPair {
    UniformGrid primal;
    double dual_spacing;
    int n_dual_half;

    [[nodiscard]] double dual_point(int j) const noexcept { return j * dual_spacing; }
};

DualGridPair make_dual_pair(double length, int n_dual_half);

class QuadratureRule {
public:
    QuadratureRule(std::vector<double> nodes, std::vector<double> weights, Interval interval);

    [[nodiscard]] std::span<const double> nodes() const noexcept { return nodes_; }
    [[nodiscard]] std::span<const double> weights() const noexcept { return weights_; }
    [[nodiscard]] const Interval& interval() const noexcept { return interval_; }
    [[nodiscard]] std::size_t size() const noexcept { return nodes_.size(); }

    template <typename F>
    [[nodiscard]] auto integrate(F&& fn) const {
        using R = decltype(fn(0.0));
        R sum{};
        for (std::size_t i = 0; i < nodes_.size(); ++i) {
            sum += weights_[i] * fn(nodes_[i]);
        }
        return sum;
    }

private:
    std::vector<double> nodes_;
    std::vector<double> weights_;
    Interval interval_;
};

// Gauss-Legendre nodes/weights on [-1, 1], Newton iteration on P_n.
struct ReferenceRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
ReferenceRule legendre_reference(int order);

// Composite rule: `panels` equal panels, `order` nodes each.
QuadratureRule gauss_legendre(const Interval& interval, int order, int panels);

// Order plus panel density; the panel count scales with interval length.
struct QuadratureSpec {
    int order = 32;
    double panels_per_unit = 1.0;

    [[nodiscard]] int panels_for(const Interval& interval) const;
    [[nodiscard]] QuadratureRule over(const Interval& interval) const;
    [[nodiscard]] QuadratureSpec refined() const { return {order, 2.0 * panels_per_unit}; }
};

} // namespace psido
