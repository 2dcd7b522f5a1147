#include "oracles.hpp"
#include "random_cases.hpp"

#include "seqbound/errors.hpp"
#include "seqbound/measurement.hpp"
#include "seqbound/spectrum.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace seqbound;
using seqbound::testing::random_case;

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kH = kDefaultAction;  // hbar = 1

// Momentum window of width xi h / dq around 0.
Window momentum_window(double xi, double dq) { return Window(0.0, xi * kH / dq); }
} // namespace

TEST(SlitProbability, ReportedValues) {
    EXPECT_EQ(slit_probability(0.0), 0.0);
    EXPECT_NEAR(slit_probability(2.0), 0.90, 0.01);
    EXPECT_NEAR(slit_probability(0.89), 0.72, 0.01);
    EXPECT_THROW(slit_probability(-0.5), ArgumentError);
}

TEST(SlitProbability, MonotoneBelowLambda0AndTendsToOne) {
    double previous = 0.0;
    for (double xi = 0.05; xi <= 4.0; xi += 0.05) {
        const double p = slit_probability(xi);
        EXPECT_GT(p, previous);
        EXPECT_LE(p, lambda0(xi) + 1e-12) << xi;
        previous = p;
    }
    EXPECT_NEAR(slit_probability(1e4), 1.0, 1e-3);
}

TEST(SlitProbability, EqualsIntegratedDensity) {
    // P(xi) = int over the momentum window of the far-field density of the slit
    for (double xi : {0.3, 0.89, 2.0, 3.1}) {
        const double dq = 1.7, hbar = 1.0;
        const double half = 0.5 * xi * kH / dq;
        const double p = seqbound::testing::adaptive_integral([&](double k) { return slit_momentum_density(k, dq, hbar); },
                                                    -half, half);
        EXPECT_NEAR(slit_probability(xi), p, 1e-12) << xi;
    }
}

TEST(SlitMomentumDensity, LimitsZerosAndNormalization) {
    const double dq = 0.8, hbar = 1.3;
    EXPECT_NEAR(slit_momentum_density(0.0, dq, hbar), dq / (2 * kPi * hbar), 1e-15);
    EXPECT_NEAR(slit_momentum_density(2 * kPi * hbar / dq, dq, hbar), 0.0, 1e-15);
    const double reach = 1e3 * hbar / dq;
    // zeros of the density are 2 pi hbar / dq apart
    const double total = seqbound::testing::panel_integral(
        [&](double p) { return slit_momentum_density(p, dq, hbar); }, -reach, reach, 2 * kPi * hbar / dq);
    EXPECT_NEAR(total, 1.0, 1e-3);
    EXPECT_THROW(slit_momentum_density(1.0, 0.0, 1.0), ArgumentError);
}

TEST(ConditionalProbability, PlaneWaveSegmentReproducesSlit) {
    const double dq = 1.0;
    const auto wave = plane_wave_segment(100.0 * dq, 1001);
    for (double xi : {0.5, 0.89, 1.0, 2.0}) {
        const double p = conditional_probability(wave, Window(0.0, dq), momentum_window(xi, dq), kH);
        EXPECT_NEAR(p, slit_probability(xi), 1e-4) << xi;
    }
}

TEST(ConditionalProbability, PlaneWaveIndependentOfSegmentLength) {
    // only psi restricted to the position window enters
    const double xi = 0.89;
    const double a = conditional_probability(plane_wave_segment(2.0, 101), Window(0.0, 1.0), momentum_window(xi, 1.0));
    const double b = conditional_probability(plane_wave_segment(100.0, 1001), Window(0.0, 1.0), momentum_window(xi, 1.0));
    EXPECT_NEAR(a, b, 1e-12);
}

TEST(ConditionalProbability, OptimalStateAttainsLambda0) {
    for (double xi : {0.5, 1.0, 2.0}) {
        OptimalStateOptions opt;
        opt.width = 1.3;
        const auto psi = optimal_state(xi, opt);
        const Window wq(0.0, opt.width), wk = momentum_window(xi, opt.width);
        const double l = lambda0(xi);
        EXPECT_NEAR(conditional_probability(psi, wq, wk), l, 1e-6) << xi;
        EXPECT_NEAR(rayleigh_quotient(psi, wq, wk), l, 1e-6) << xi;
    }
}

TEST(ConditionalProbability, OptimalStateWithPaddingOffCentre) {
    OptimalStateOptions opt;
    opt.center = 2.5;
    opt.width = 0.7;
    opt.padding = 0.5;
    const auto psi = optimal_state(1.0, opt);
    EXPECT_NEAR(conditional_probability(psi, Window(2.5, 0.7), momentum_window(1.0, 0.7)), lambda0(1.0), 1e-6);
}

TEST(ConditionalProbability, RouteEquivalenceOnRandomStates) {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const double xi = 0.5 + 0.1 * static_cast<double>(seed % 15);
        const auto c = random_case(xi, seed);
        const double forward = conditional_probability(c.state, c.window_q, c.window_k);
        const double rayleigh = rayleigh_quotient(c.state, c.window_q, c.window_k);
        EXPECT_NEAR(forward, rayleigh, 1e-8) << "seed=" << seed;
        EXPECT_GE(forward, -1e-10);
        EXPECT_LE(forward, lambda0(xi) + 1e-8) << "seed=" << seed;
    }
}

TEST(ConditionalProbability, FullMomentumSpaceGivesOne) {
    // low density at the window edges keeps the sharp-cutoff tail small
    const auto g = gaussian_state(0.1, {4.0, 401});
    const double dq = 1.0;
    const double p = conditional_probability(g, Window(0.0, dq), Window(0.0, 1e3 * 1.0 / dq), kH);
    EXPECT_NEAR(p, 1.0, 1e-3);
}

TEST(ConditionalProbability, Errors) {
    const auto g = gaussian_state(0.1, {20.0, 401});
    EXPECT_THROW(conditional_probability(g, Window(9.8, 1.0), Window(0.0, 1.0)), ArgumentError);
    EXPECT_THROW(conditional_probability(g, Window(9.0, 1.0), Window(0.0, 1.0)), PreconditionError);
    EXPECT_THROW(rayleigh_quotient(g, Window(9.0, 1.0), Window(0.0, 1.0)), PreconditionError);
    EXPECT_THROW(conditional_probability(g, Window(0.0, 1.0), Window(0.0, 1.0), 0.0), ArgumentError);
}

TEST(ConditionalProbability, PhysicalUnits) {
    // same xi in units with h = 1 gives the same probability
    const double xi = 1.0;
    OptimalStateOptions opt;
    const auto psi = optimal_state(xi, opt);
    const PrecisionPair pp(1.0, xi * 1.0 / 1.0, 1.0);
    EXPECT_NEAR(conditional_probability(psi, Window(0.0, pp.dq), Window(0.0, pp.dk), pp.h), lambda0(xi), 1e-6);
}

TEST(GaussianState, MatchedWindowsStayBelowLambda0) {
    // windows matched to the spreads: dq = 2 sqrt(pi xi) sigma_x, dk = xi h / dq
    const double xi = 1.0;
    const double l = lambda0(xi);
    double best = 0.0;
    for (double sigma : {0.05, 0.2, 1.0, 3.0}) {
        const auto g = gaussian_state(sigma, {12.0 * sigma, 1201});
        const double dq = 2.0 * std::sqrt(kPi * xi) * sigma;
        const double p = conditional_probability(g, Window(0.0, dq), momentum_window(xi, dq));
        best = std::max(best, p);
    }
    EXPECT_LE(best, l - 1e-3);
}

TEST(GaussianState, FlatDensityLimit) {
    const double dq = 1.0;
    for (double sigma : {20.0, 50.0, 100.0}) {
        const auto g = gaussian_state(sigma, {10.0 * sigma, 2001});
        const double p = position_selection_probability(g, Window(0.0, dq));
        // exact for the Gaussian truncated to the grid
        const double on_grid = std::erf(5.0 * sigma / (std::sqrt(2.0) * sigma));
        EXPECT_NEAR(p, std::erf(dq / (2.0 * std::sqrt(2.0) * sigma)) / on_grid, 1e-11);
        EXPECT_NEAR(p / (dq / (sigma * std::sqrt(2 * kPi))), 1.0, 1e-3);
    }
}

TEST(ReversedOrder, BoundedOnRandomStates) {
    const double l = lambda0(1.0);
    for (std::uint64_t seed = 100; seed < 120; ++seed) {
        const auto c = random_case(1.0, seed);
        const double p = reversed_order_probability(c.state, c.window_k, c.window_q);
        EXPECT_LE(p, l + 1e-6) << "seed=" << seed;
        EXPECT_GE(p, 0.0);
    }
}

TEST(ReversedOrder, SelfDualGaussianMatchesForward) {
    // sigma_x = sigma_p = 1/sqrt(2); equal windows give xi = 1
    const auto g = gaussian_state(1.0 / std::sqrt(2.0), {14.0, 1401});
    const double w = std::sqrt(kH);
    const double forward = conditional_probability(g, Window(0.0, w), Window(0.0, w));
    const double reversed = reversed_order_probability(g, Window(0.0, w), Window(0.0, w));
    EXPECT_NEAR(forward, reversed, 1e-6);
}

TEST(ReversedOrder, FullPositionSpaceGivesOne) {
    const auto g = gaussian_state(0.3, {4.0, 401});
    const double p = reversed_order_probability(g, Window(0.0, 1.0), Window(0.0, 1e3 * 4.0));
    EXPECT_NEAR(p, 1.0, 1e-3);
}

TEST(ReversedOrder, MomentumSelectionMatchesGaussianOracle) {
    // |phi(p)|^2 is Gaussian with spread 1 / (2 sigma_x)
    const double sigma = 0.4;
    const auto g = gaussian_state(sigma, {8.0, 801});
    const double sp = 1.0 / (2.0 * sigma);
    EXPECT_NEAR(momentum_selection_probability(g, Window(0.0, 1.0)), std::erf(0.5 / (std::sqrt(2.0) * sp)), 1e-7);
}

TEST(Invariance, ZeroShiftIsIdentical) {
    const auto c = random_case(1.0, 5);
    const auto [a, b] = invariance_check(c.state, c.window_q, c.window_k, 0.0, 0.0);
    EXPECT_EQ(a, b);
}

TEST(Invariance, RandomShiftAgrees) {
    const auto c = random_case(1.0, 6);
    const auto [a, b] = invariance_check(c.state, c.window_q, c.window_k, 1.3, 0.7);
    EXPECT_NEAR(a, b, 1e-8);
}

TEST(Invariance, ShiftedOptimalStateStillAttainsLambda0) {
    const auto psi = optimal_state(2.0);
    const auto [a, b] = invariance_check(psi, Window(0.0, 1.0), momentum_window(2.0, 1.0), -3.7, 5.2);
    EXPECT_NEAR(a, lambda0(2.0), 1e-6);
    EXPECT_NEAR(b, lambda0(2.0), 1e-6);
}
