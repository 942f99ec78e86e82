#pragma once

namespace psido::detail {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

// Probabilists' Hermite polynomial He_n(t) by the three-term recurrence.
inline double hermite_he(int n, double t) noexcept
{
    if (n == 0) {
        return 1.0;
    }
    double h0 = 1.0;
    double h1 = t;
    for (int m = 1; m < n; ++m) {
        const double h2 = t * h1 - m * h0;
        h0 = h1;
        h1 = h2;
    }
    return h1;
}

} // namespace psido::detail
