#pragma once

#include <span>
#include <vector>

namespace psido {

// Natural cubic spline (zero second derivative at both ends) through (x_i, y_i).
// Knots must be strictly increasing; at least 4 of them.
class CubicSpline {
public:
    CubicSpline(std::vector<double> x, std::vector<double> y);

    [[nodiscard]] double value(double x) const;
    [[nodiscard]] double derivative(double x, int order) const;

    [[nodiscard]] double lo() const noexcept { return x_.front(); }
    [[nodiscard]] double hi() const noexcept { return x_.back(); }
    [[nodiscard]] std::span<const double> knots() const noexcept { return x_; }
    [[nodiscard]] std::span<const double> samples() const noexcept { return y_; }

private:
    [[nodiscard]] std::size_t segment(double x) const;

    std::vector<double> x_;
    std::vector<double> y_;
    std::vector<double> m_; // second derivatives at the knots
    bool uniform_ = false;
};

} // namespace psido
