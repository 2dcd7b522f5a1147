#include "oracles.hpp"

#include "seqbound/errors.hpp"
#include "seqbound/quadrature.hpp"
#include "seqbound/specfun.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>

using namespace seqbound;
using seqbound::testing::cin_by_quadrature;
using seqbound::testing::erf_series;
using seqbound::testing::si_by_quadrature;

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kInf = std::numeric_limits<double>::infinity();
} // namespace

TEST(SineIntegral, FrozenValues) {
    EXPECT_EQ(specfun::sine_integral(0.0), 0.0);
    // mpmath, 30 digits
    EXPECT_NEAR(specfun::sine_integral(kPi), 1.85193705198246617, 1e-14);
    EXPECT_NEAR(specfun::sine_integral(100.0), 1.56222546688905629, 1e-13);
    EXPECT_NEAR(specfun::sine_integral(10.5), 1.62294069280805590, 1e-13);
}

TEST(SineIntegral, OddSymmetry) {
    for (double x : {0.3, kPi, 9.99, 10.01, 57.0})
        EXPECT_EQ(specfun::sine_integral(-x), -specfun::sine_integral(x)) << x;
}

TEST(SineIntegral, MatchesQuadratureOracle) {
    for (double x = -100.0; x <= 100.0; x += 1.37)
        EXPECT_NEAR(specfun::sine_integral(x), si_by_quadrature(x), 1e-12) << "x=" << x;
    // both sides of the series / continued-fraction switch
    for (double x : {9.5, 9.999, 10.0, 10.001, 10.5})
        EXPECT_NEAR(specfun::sine_integral(x), si_by_quadrature(x), 1e-12) << "x=" << x;
}

TEST(Cin, FrozenValues) {
    EXPECT_EQ(specfun::cin(0.0), 0.0);
    EXPECT_NEAR(specfun::cin(2 * kPi), 2.43765339305722441, 1e-14);
    EXPECT_NEAR(specfun::cin(100.0), 5.18753467603223472, 1e-12);
}

TEST(Cin, EvenSymmetryAndOracle) {
    EXPECT_EQ(specfun::cin(-2 * kPi), specfun::cin(2 * kPi));
    for (double x = -100.0; x <= 100.0; x += 1.37)
        EXPECT_NEAR(specfun::cin(x), cin_by_quadrature(x), 1e-12) << "x=" << x;
    for (double x : {9.999, 10.0, 10.001})
        EXPECT_NEAR(specfun::cin(x), cin_by_quadrature(x), 1e-12) << "x=" << x;
}

TEST(Erf, ValuesSymmetryAndLimit) {
    EXPECT_EQ(specfun::erf(0.0), 0.0);
    EXPECT_NEAR(specfun::erf(1.0), 0.842700792949714869, 1e-15);
    for (double x = -2.0; x <= 2.0; x += 0.125) {
        EXPECT_NEAR(specfun::erf(x), erf_series(x), 1e-14) << x;
        EXPECT_EQ(specfun::erf(-x), -specfun::erf(x));
    }
    EXPECT_NEAR(specfun::erf(6.0), 1.0, 1e-15);
    EXPECT_NEAR(specfun::erf(20.0), 1.0, 1e-15);
}

TEST(SpecialFunctions, RejectNonFinite) {
    EXPECT_THROW(specfun::sine_integral(kNaN), DomainError);
    EXPECT_THROW(specfun::cin(kInf), DomainError);
    EXPECT_THROW(specfun::erf(-kInf), DomainError);
}

TEST(Sinc, SeriesBranchIsContinuous) {
    for (double t : {1e-5, 9.9e-5, 1.01e-4, 0.249, 0.2501, 1.0}) {
        EXPECT_NEAR(specfun::sinc(t), std::sin(t) / t, 2.5e-16);
        // central difference of sinc as a reference for the derivative
        const double h = std::min(1e-5, 0.5 * t);
        const double fd = (std::sin(t + h) / (t + h) - std::sin(t - h) / (t - h)) / (2 * h);
        EXPECT_NEAR(specfun::sinc_derivative(t), fd, 1e-9) << t;
    }
    EXPECT_EQ(specfun::sinc(0.0), 1.0);
    EXPECT_EQ(specfun::sinc_derivative(0.0), 0.0);
}

TEST(GaussLegendre, LowOrdersAnalytic) {
    const auto r1 = gauss_legendre(1);
    ASSERT_EQ(r1.order(), 1u);
    EXPECT_EQ(r1.nodes()[0], 0.0);
    EXPECT_EQ(r1.weights()[0], 2.0);

    const auto r2 = gauss_legendre(2);
    EXPECT_NEAR(r2.nodes()[0], -1.0 / std::sqrt(3.0), 3e-16);
    EXPECT_NEAR(r2.nodes()[1], 1.0 / std::sqrt(3.0), 3e-16);
    EXPECT_NEAR(r2.weights()[0], 1.0, 1e-15);
    EXPECT_NEAR(r2.weights()[1], 1.0, 1e-15);
}

TEST(GaussLegendre, RejectsOrderOutOfRange) {
    EXPECT_THROW(gauss_legendre(0), ArgumentError);
    EXPECT_THROW(gauss_legendre(-3), ArgumentError);
    EXPECT_THROW(gauss_legendre(kMaxQuadratureOrder + 1), ArgumentError);
}

class GaussLegendreOrder : public ::testing::TestWithParam<int> {};

TEST_P(GaussLegendreOrder, RuleInvariants) {
    const int n = GetParam();
    const auto rule = gauss_legendre(n);
    ASSERT_EQ(rule.order(), static_cast<std::size_t>(n));
    double wsum = 0.0;
    for (int i = 0; i < n; ++i) {
        EXPECT_GT(rule.weights()[i], 0.0);
        EXPECT_GT(rule.nodes()[i], -1.0);
        EXPECT_LT(rule.nodes()[i], 1.0);
        if (i > 0) EXPECT_LT(rule.nodes()[i - 1], rule.nodes()[i]);
        EXPECT_NEAR(rule.nodes()[i], -rule.nodes()[n - 1 - i], 1e-14);
        wsum += rule.weights()[i];
    }
    EXPECT_NEAR(wsum, 2.0, 1e-13);
}

TEST_P(GaussLegendreOrder, PolynomialExactness) {
    const int n = GetParam();
    const auto rule = gauss_legendre(n);
    // x^2 for any order >= 2
    if (n >= 2) EXPECT_NEAR(rule.integrate([](double x) { return x * x; }), 2.0 / 3.0, 1e-13);
    for (int k = 0; k <= 2 * n - 1; ++k) {
        const double q = rule.integrate([k](double x) { return std::pow(x, k); });
        if (k % 2 == 1) {
            EXPECT_NEAR(q, 0.0, 1e-14) << "k=" << k;
        } else {
            const double exact = 2.0 / (k + 1);
            EXPECT_NEAR(q / exact, 1.0, 1e-12) << "k=" << k;
        }
        if (k > 200) break;  // x^k underflows toward the ends; enough coverage
    }
}

INSTANTIATE_TEST_SUITE_P(Orders, GaussLegendreOrder, ::testing::Values(1, 2, 3, 5, 8, 17, 64, 129, 512, 4096));

TEST(CompositeRule, IntegratesOscillatoryExponential) {
    const auto r = composite_rule(0.0, 10.0, 20, 8);
    double re = 0.0;
    for (std::size_t i = 0; i < r.points.size(); ++i) re += r.weights[i] * std::cos(3.0 * r.points[i]);
    EXPECT_NEAR(re, std::sin(30.0) / 3.0, 1e-14);
}
