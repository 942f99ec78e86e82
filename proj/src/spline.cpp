#include "psido/spline.hpp"

#include "psido/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace psido {

CubicSpline::CubicSpline(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y))
{
    const std::size_t n = x_.size();
    if (n != y_.size()) {
        throw ConfigError("spline needs as many values as knots");
    }
    if (n < 4) {
        throw ConfigError("spline needs at least 4 knots, got " + std::to_string(n));
    }
    for (std::size_t i = 1; i < n; ++i) {
        if (!(x_[i] > x_[i - 1])) {
            throw ConfigError("spline knots must be strictly increasing");
        }
    }

    // Thomas algorithm on the interior second-derivative system.
    m_.assign(n, 0.0);
    std::vector<double> c(n, 0.0);
    std::vector<double> d(n, 0.0);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double h0 = x_[i] - x_[i - 1];
        const double h1 = x_[i + 1] - x_[i];
        const double a = h0;
        const double b = 2.0 * (h0 + h1);
        const double cc = h1;
        const double rhs = 6.0 * ((y_[i + 1] - y_[i]) / h1 - (y_[i] - y_[i - 1]) / h0);
        const double denom = b - a * c[i - 1];
        c[i] = cc / denom;
        d[i] = (rhs - a * d[i - 1]) / denom;
    }
    for (std::size_t i = n - 2; i >= 1; --i) {
        m_[i] = d[i] - c[i] * m_[i + 1];
    }

    const double h = (x_.back() - x_.front()) / static_cast<double>(n - 1);
    uniform_ = true;
    for (std::size_t i = 1; i < n && uniform_; ++i) {
        uniform_ = std::abs(x_[i] - x_[i - 1] - h) <= 1e-9 * h;
    }
}

std::size_t CubicSpline::segment(double x) const
{
    if (x < x_.front() || x > x_.back()) {
        throw DomainError("tabulated potential evaluated at x=" + std::to_string(x)
                          + " outside [" + std::to_string(x_.front()) + ", "
                          + std::to_string(x_.back()) + "]");
    }
    const std::size_t last = x_.size() - 2;
    if (uniform_) {
        const double h = (x_.back() - x_.front()) / static_cast<double>(x_.size() - 1);
        auto i = static_cast<std::size_t>((x - x_.front()) / h);
        i = std::min(i, last);
        // Guard against the floor landing one cell off.
        if (i > 0 && x < x_[i]) {
            --i;
        } else if (i < last && x > x_[i + 1]) {
            ++i;
        }
        return i;
    }
    const auto it = std::upper_bound(x_.begin(), x_.end(), x);
    const auto i = static_cast<std::size_t>(std::distance(x_.begin(), it));
    return std::min(i == 0 ? 0 : i - 1, last);
}

double CubicSpline::value(double x) const
{
    const std::size_t i = segment(x);
    const double h = x_[i + 1] - x_[i];
    const double a = (x_[i + 1] - x) / h;
    const double b = (x - x_[i]) / h;
    return a * y_[i] + b * y_[i + 1]
           + ((a * a * a - a) * m_[i] + (b * b * b - b) * m_[i + 1]) * (h * h) / 6.0;
}

double CubicSpline::derivative(double x, int order) const
{
    if (order == 0) {
        return value(x);
    }
    const std::size_t i = segment(x);
    const double h = x_[i + 1] - x_[i];
    const double a = (x_[i + 1] - x) / h;
    const double b = (x - x_[i]) / h;
    switch (order) {
    case 1:
        return (y_[i + 1] - y_[i]) / h
               - (3.0 * a * a - 1.0) / 6.0 * h * m_[i]
               + (3.0 * b * b - 1.0) / 6.0 * h * m_[i + 1];
    case 2:
        return a * m_[i] + b * m_[i + 1];
    case 3:
        return (m_[i + 1] - m_[i]) / h;
    default:
        return 0.0;
    }
}

} // namespace psido
