#include "seqbound/specfun.hpp"

#include "seqbound/errors.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <string>

namespace seqbound::specfun {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
// Below this |x| the power series is used; above it the auxiliary functions.
constexpr double kSeriesSwitch = 10.0;

void require_finite(double x, const char* name) {
    if (!std::isfinite(x))
        throw DomainError(std::string(name) + ": argument must be finite");
}

// Si(x) = sum_k (-1)^k x^(2k+1) / ((2k+1) (2k+1)!)
double si_series(double x) {
    const double x2 = x * x;
    double term = x;  // x^(2k+1)/(2k+1)!
    double sum = x;
    for (int k = 1; k < 200; ++k) {
        term *= -x2 / ((2.0 * k) * (2.0 * k + 1.0));
        const double add = term / (2.0 * k + 1.0);
        sum += add;
        if (std::abs(add) < kEps * std::abs(sum)) break;
    }
    return sum;
}

// Cin(x) = sum_{k>=1} (-1)^(k+1) x^(2k) / (2k (2k)!)
double cin_series(double x) {
    const double x2 = x * x;
    double term = 1.0;  // x^(2k)/(2k)!
    double sum = 0.0;
    for (int k = 1; k < 200; ++k) {
        term *= x2 / ((2.0 * k - 1.0) * (2.0 * k));
        const double add = (k % 2 == 1 ? 1.0 : -1.0) * term / (2.0 * k);
        sum += add;
        if (std::abs(add) < kEps * std::abs(sum)) break;
    }
    return sum;
}

// E1(ix) for x > 0 by the modified Lentz continued fraction
//   E1(z) = e^{-z} / (z + 1 - 1^2/(z + 3 - 2^2/(z + 5 - ...))).
// Returns (Ci(x), Si(x)) via E1(ix) = -Ci(x) + i (Si(x) - pi/2).
// The f/g auxiliary functions are Re/Im of e^{ix} E1(ix) up to sign.
std::pair<double, double> ci_si_auxiliary(double x) {
    using cd = std::complex<double>;
    constexpr double tiny = 1e-300;
    cd b(1.0, x);
    cd c(1.0 / tiny, 0.0);
    cd d = 1.0 / b;
    cd h = d;
    for (int i = 2; i < 100000; ++i) {
        const double a = -static_cast<double>((i - 1) * (i - 1));
        b += 2.0;
        d = 1.0 / (a * d + b);
        c = b + a / c;
        const cd del = c * d;
        h *= del;
        if (std::abs(del.real() - 1.0) + std::abs(del.imag()) < kEps) break;
    }
    h *= cd(std::cos(x), -std::sin(x));
    return {-h.real(), std::numbers::pi / 2 + h.imag()};
}

} // namespace

double sine_integral(double x) {
    require_finite(x, "sine_integral");
    const double ax = std::abs(x);
    const double v = ax <= kSeriesSwitch ? si_series(ax) : ci_si_auxiliary(ax).second;
    return std::copysign(v, x);
}

double cin(double x) {
    require_finite(x, "cin");
    const double ax = std::abs(x);
    if (ax <= kSeriesSwitch) return cin_series(ax);
    const double ci = ci_si_auxiliary(ax).first;
    return std::numbers::egamma + std::log(ax) - ci;
}

double erf(double x) {
    require_finite(x, "erf");
    return std::erf(x);
}

double sinc(double t) {
    if (std::abs(t) < 1e-4) {
        const double t2 = t * t;
        return 1.0 - t2 / 6.0 * (1.0 - t2 / 20.0);
    }
    return std::sin(t) / t;
}

double sinc_derivative(double t) {
    if (std::abs(t) < 0.25) {
        // -t/3 + t^3/30 - t^5/840 + t^7/45360 - t^9/3991680
        const double t2 = t * t;
        return t * (-1.0 / 3.0 + t2 * (1.0 / 30.0 + t2 * (-1.0 / 840.0 + t2 * (1.0 / 45360.0 - t2 / 3991680.0))));
    }
    return (t * std::cos(t) - std::sin(t)) / (t * t);
}

} // namespace seqbound::specfun
