#include "psido/grid.hpp"

#include "psido/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace psido {

Interval::Interval(double lo, double hi) : lo_(lo), hi_(hi)
{
    if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
        throw DomainError("interval requires finite lo < hi, got [" + std::to_string(lo) + ", "
                          + std::to_string(hi) + "]");
    }
}

UniformGrid::UniformGrid(Interval interval, std::size_t n_points, Kind kind)
    : interval_(interval), n_(n_points), spacing_(0.0), kind_(kind)
{
    if (kind == Kind::closed && n_points < 2) {
        throw ConfigError("closed grid needs at least 2 points");
    }
    if (n_points < 1) {
        throw ConfigError("grid needs at least 1 point");
    }
    spacing_ = kind == Kind::closed ? interval.length() / static_cast<double>(n_points - 1)
                                    : interval.length() / static_cast<double>(n_points);
}

double UniformGrid::point(std::size_t i) const noexcept
{
    if (kind_ == Kind::closed) {
        // Fill from whichever end is nearer so symmetric grids mirror exactly.
        const std::size_t last = n_ - 1;
        if (2 * i > last) {
            return interval_.hi() - static_cast<double>(last - i) * spacing_;
        }
        if (2 * i == last) {
            return interval_.mid();
        }
    }
    return interval_.lo() + static_cast<double>(i) * spacing_;
}

std::vector<double> UniformGrid::points() const
{
    std::vector<double> out(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        out[i] = point(i);
    }
    return out;
}

DualGridPair make_dual_pair(double length, int n_dual_half)
{
    if (!(length > 0.0) || !std::isfinite(length)) {
        throw DomainError("dual pair needs a positive length, got " + std::to_string(length));
    }
    if (n_dual_half < 1) {
        throw ConfigError("dual pair needs n_dual_half >= 1");
    }
    const auto n_primal = static_cast<std::size_t>(2 * n_dual_half + 1);
    return DualGridPair{
        UniformGrid(Interval::symmetric(0.5 * length), n_primal, UniformGrid::Kind::periodic),
        two_pi / length,
        n_dual_half,
    };
}

QuadratureRule::QuadratureRule(std::vector<double> nodes, std::vector<double> weights,
                               Interval interval)
    : nodes_(std::move(nodes)), weights_(std::move(weights)), interval_(interval)
{
    if (nodes_.size() != weights_.size() || nodes_.empty()) {
        throw ConfigError("quadrature rule needs matching, non-empty nodes and weights");
    }
}

ReferenceRule legendre_reference(int order)
{
    if (order < 1) {
        throw ConfigError("Gauss-Legendre order must be >= 1");
    }
    const int n = order;
    ReferenceRule rule{std::vector<double>(n), std::vector<double>(n)};
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Tricomi initial guess, then Newton on P_n.
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            const double pn = n == 1 ? x : p1;
            const double pnm1 = n == 1 ? 1.0 : p0;
            dp = n * (x * pn - pnm1) / (x * x - 1.0);
            const double dx = pn / dp;
            x -= dx;
            if (std::abs(dx) <= 1e-16) {
                break;
            }
        }
        // One more derivative evaluation at the converged node for the weight.
        double p0 = 1.0;
        double p1 = x;
        for (int k = 2; k <= n; ++k) {
            const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        dp = n == 1 ? 1.0 : n * (x * p1 - p0) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        if (n % 2 == 1 && i == half - 1) {
            x = 0.0;
        }
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

QuadratureRule gauss_legendre(const Interval& interval, int order, int panels)
{
    if (panels < 1) {
        throw ConfigError("Gauss-Legendre needs at least one panel");
    }
    const ReferenceRule ref = legendre_reference(order);
    const double h = interval.length() / panels;
    std::vector<double> nodes;
    std::vector<double> weights;
    nodes.reserve(static_cast<std::size_t>(order) * panels);
    weights.reserve(nodes.capacity());
    for (int p = 0; p < panels; ++p) {
        // Centres of the upper half are measured from hi so symmetric intervals mirror exactly.
        const double c = 2 * p + 1 < panels ? interval.lo() + (p + 0.5) * h
                         : 2 * p + 1 == panels ? interval.mid()
                                               : interval.hi() - (panels - p - 0.5) * h;
        for (int j = 0; j < order; ++j) {
            nodes.push_back(c + 0.5 * h * ref.nodes[j]);
            weights.push_back(0.5 * h * ref.weights[j]);
        }
    }
    return QuadratureRule(std::move(nodes), std::move(weights), interval);
}

int QuadratureSpec::panels_for(const Interval& interval) const
{
    if (!(panels_per_unit > 0.0)) {
        throw ConfigError("quadrature panel density must be positive");
    }
    return std::max(1, static_cast<int>(std::ceil(interval.length() * panels_per_unit - 1e-9)));
}

QuadratureRule QuadratureSpec::over(const Interval& interval) const
{
    return gauss_legendre(interval, order, panels_for(interval));
}

} // namespace psido
