#include "checks.hpp"

#include "psido/errors.hpp"
#include "psido/operators.hpp"
#include "psido/reference.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

using namespace psido;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

const double pi = std::numbers::pi;

Potential zero_potential()
{
    return Potential::tabulated({-40.0, -10.0, 10.0, 40.0}, {0.0, 0.0, 0.0, 0.0}, "zero");
}

GridSamples gauss_oracle(const PhaseGrid& grid)
{
    return sample_reference(grid, [](double x, double k) { return gauss_barrier_reference(x, k); });
}

} // namespace

TEST_CASE("y-truncation", "[operators]")
{
    const WignerState s = WignerState::gauss_packet();
    const PhaseGrid grid = checks::gauss_grid();
    const GridSamples oracle = gauss_oracle(grid);

    const PsiDoField f = y_truncation(s, Potential::gauss_barrier(), grid, {40.0, 40, {}});
    CHECK(f.values.size() == grid.size());
    CHECK(linf_error(f, oracle).eps_inf <= 1e-13);

    const PsiDoField z = y_truncation(s, zero_potential(), grid, {40.0, 40, {}});
    CHECK(z.max_abs_real() <= 1e-15);

    const PhaseGrid wide = checks::well_grid();
    const double eps = linf_error(y_truncation(s, Potential::double_well(), wide, {45.0, 45, {}}),
                                  [&](double x, double k) { return double_well_reference(s, x, k); })
                           .eps_inf;
    CHECK(checks::decade_match(eps, 5.8891e-12));

    CHECK_THROWS_AS(y_truncation(s, Potential::gauss_barrier(), grid, {0.0, 40, {}}), ConfigError);
    CHECK_THROWS_AS(y_truncation(s, Potential::gauss_barrier(), grid, {40.0, -1, {}}), ConfigError);
}

TEST_CASE("k-truncation", "[operators]")
{
    const WignerState s = WignerState::gauss_packet();
    const PhaseGrid grid = checks::gauss_grid();
    const KConfig cfg{4.0 * pi, 40, {}};
    CHECK(linf_error(k_truncation(s, Potential::gauss_barrier(), grid, cfg), gauss_oracle(grid)).eps_inf <= 1e-13);

    const PhaseGrid wide = checks::well_grid();
    const double eps = linf_error(k_truncation(s, Potential::double_well(), wide, {4.0 * pi, 40, {}}),
                                  [&](double x, double k) { return double_well_reference(s, x, k); })
                           .eps_inf;
    CHECK(checks::decade_match(eps, 1.7387e-09));

    // the evaluation k-domain must lie inside the window
    CHECK_THROWS_AS(k_truncation(s, Potential::gauss_barrier(), grid, {2.0 * pi, 40, {}}), ConfigError);
}

TEST_CASE("g_xi estimator", "[operators]")
{
    const WignerState s = WignerState::gauss_packet();
    const PhaseGrid grid = checks::gauss_grid();
    CHECK(checks::decade_match(g_xi_estimate(s, Potential::gauss_barrier(), grid, {4.0 * pi, 20, {}}), 6.7178e-07));
    CHECK(g_xi_estimate(s, zero_potential(), grid, {4.0 * pi, 20, {}}) == 0.0);
}

TEST_CASE("g_xi estimator for the double well at N_xi = 50", "[operators]")
{
    const WignerState s = WignerState::gauss_packet();
    const double g = g_xi_estimate(s, Potential::double_well(), checks::well_grid(), {4.0 * pi, 50, {}});
    INFO("g = " << g);
    CHECK(checks::decade_match(g, 1.1937e-11));
}

TEST_CASE("m-truncation", "[operators]")
{
    const WignerState s = WignerState::gauss_packet();
    const PhaseGrid wide = checks::well_grid(61, 61);
    const PsiDoField m = m_truncation(s, Potential::double_well(1.0, 2.0), wide, {1});
    double worst = 0.0;
    for (std::size_t ix = 0; ix < wide.x.size(); ++ix) {
        for (std::size_t ik = 0; ik < wide.k.size(); ++ik) {
            worst = std::max(worst, std::abs(m.real(ix, ik)
                                             - double_well_reference(s, wide.x.point(ix), wide.k.point(ik), 1.0, 2.0)));
        }
    }
    CHECK(worst <= 1e-14);

    // P = 0 is the classical force term; it vanishes where dV/dx does.
    const PhaseGrid grid = checks::gauss_grid(21, 21);
    const PsiDoField c = m_truncation(s, Potential::gauss_barrier(), grid, {0});
    for (std::size_t ik = 0; ik < grid.k.size(); ++ik) {
        CHECK(c.real(10, ik) == 0.0);
        const double x = grid.x.point(3);
        const double k = grid.k.point(ik);
        CHECK_THAT(c.real(3, ik), WithinAbs(Potential::gauss_barrier().derivative(x, 1) * s.k_derivative(x, k, 1), 1e-15));
    }

    CHECK_THROWS_AS(m_truncation(s, make_rtd_like_tabulated(256, {-10.0, 10.0}), grid, {1}), UnsupportedError);
    CHECK_NOTHROW(m_truncation(s, make_rtd_like_tabulated(256, {-10.0, 10.0}), grid, {0}));
}

TEST_CASE("m-truncation does not converge for the Gauss barrier", "[operators]")
{
    const WignerState s = WignerState::gauss_packet();
    const PhaseGrid grid = checks::gauss_grid(101, 101);
    const GridSamples oracle = gauss_oracle(grid);
    double previous = std::numeric_limits<double>::infinity();
    bool decreasing = true;
    for (int P = 0; P <= 5; ++P) {
        const double e = linf_error(m_truncation(s, Potential::gauss_barrier(), grid, {P}), oracle).eps_inf;
        decreasing = decreasing && e < previous;
        previous = e;
    }
    CHECK_FALSE(decreasing);
}

TEST_CASE("f-truncation", "[operators]")
{
    const WignerState s = WignerState::gauss_packet();
    const PhaseGrid grid = checks::gauss_grid();
    const double eps
        = linf_error(f_truncation(s, Potential::gauss_barrier(), grid, {30, {-10.0, 10.0}, {}}), gauss_oracle(grid))
              .eps_inf;
    CHECK(eps <= 1e-13);

    const PhaseGrid wide = checks::well_grid();
    const double dw = linf_error(f_truncation(s, Potential::double_well(), wide, {90, {-15.0, 15.0}, {}}),
                                 [&](double x, double k) { return double_well_reference(s, x, k); })
                          .eps_inf;
    CHECK(checks::decade_match(dw, 1.8493e-10));
}

TEST_CASE("f-truncation of a constant force", "[operators]")
{
    // V = -c x: F~ is c L_x at k = 0 and zero on the rest of the lattice, so
    // only the classical term survives. Compared on the central half of X.
    const double c = 0.3;
    const Interval x_domain(-10.0, 10.0);
    const UniformGrid samples(Interval(-12.0, 12.0), 241);
    std::vector<double> xs = samples.points();
    std::vector<double> vs;
    for (const double x : xs) {
        vs.push_back(-c * x);
    }
    const Potential ramp = Potential::tabulated(xs, vs, "ramp");
    const WignerState s = WignerState::gauss_packet();
    const PhaseGrid grid = PhaseGrid::uniform(Interval(-5.0, 5.0), Interval(-two_pi, two_pi), 41, 81);
    const PsiDoField f = f_truncation(s, ramp, grid, {30, x_domain, {}});
    const PsiDoField m = m_truncation(s, ramp, grid, {0});
    double worst = 0.0;
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        worst = std::max(worst, std::abs(f.values[i].real() - m.values[i].real()));
    }
    CHECK(worst <= 1e-6);
}

TEST_CASE("g_nu estimator", "[operators]")
{
    const Potential gb = Potential::gauss_barrier();
    CHECK(checks::decade_match(g_nu_estimate(gb, {10, {-10.0, 10.0}, {}}), 0.0023));
    const double g30 = g_nu_estimate(gb, {30, {-10.0, 10.0}, {}});
    CHECK(std::abs(checks::decade(g30) - checks::decade(1.6171e-20)) <= 2);
    CHECK_THROWS_AS(g_nu_estimate(gb, {0, {-10.0, 10.0}, {}}), ConfigError);

    // Halving L_x doubles dk; halving N_nu keeps k_N = 2 pi / 10 fixed. The Gauss
    // force beyond |x| = 5 changes F~ there by about 1e-5 relative.
    const FConfig wide{2, {-10.0, 10.0}, {32, 4.0}};
    const FConfig narrow{1, {-5.0, 5.0}, {32, 4.0}};
    CHECK_THAT(g_nu_estimate(gb, narrow) / g_nu_estimate(gb, wide), WithinRel(2.0, 1e-4));
}

TEST_CASE("configuration description and validation", "[operators]")
{
    const TruncationConfig k{KConfig{4.0 * pi, 40, {}}};
    CHECK(scheme_tag(k.scheme) == "k");
    CHECK(describe(k).find("N_xi=40") != std::string::npos);
    CHECK_THROWS_AS(validate({MConfig{-1}}), ConfigError);
    CHECK_THROWS_AS(validate({FConfig{3, {-1.0, 1.0}, {0, 1.0}}}), ConfigError);
    CHECK_THROWS_AS(validate({YConfig{}, -1.0}), ConfigError);
    CHECK_NOTHROW(validate({MConfig{0}}));
}

TEST_CASE("hbar is carried through", "[operators]")
{
    const WignerState s = WignerState::gauss_packet();
    const PhaseGrid grid = checks::gauss_grid(21, 21);
    const Potential gb = Potential::gauss_barrier();
    for (const TruncationConfig& c : {TruncationConfig{YConfig{40.0, 40, {}}, 0.5},
                                      TruncationConfig{KConfig{4.0 * pi, 40, {}}, 0.5},
                                      TruncationConfig{MConfig{2}, 0.5},
                                      TruncationConfig{FConfig{30, {-10.0, 10.0}, {}}, 0.5}}) {
        TruncationConfig unit = c;
        unit.hbar = 1.0;
        const PsiDoField half = evaluate(s, gb, grid, c);
        const PsiDoField one = evaluate(s, gb, grid, unit);
        for (std::size_t i = 0; i < half.values.size(); ++i) {
            CHECK_THAT(half.values[i].real(), WithinAbs(2.0 * one.values[i].real(), 1e-14));
        }
    }
}
