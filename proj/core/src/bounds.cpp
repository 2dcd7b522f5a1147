#include "seqbound/bounds.hpp"

#include "seqbound/errors.hpp"
#include "seqbound/specfun.hpp"
#include "seqbound/spectrum.hpp"

#include <boost/math/tools/roots.hpp>

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

namespace seqbound {

using std::numbers::pi;

namespace {

void require_xi(double xi, const char* where) {
    if (!(xi >= 0.0) || !std::isfinite(xi))
        throw ArgumentError(std::string(where) + ": xi must be finite and >= 0");
}

} // namespace

double trace_bound(double xi) {
    require_xi(xi, "trace_bound");
    return xi;
}

double hs_bound(double xi) {
    require_xi(xi, "hs_bound");
    if (xi == 0.0) return 0.0;
    const double z = 2.0 * pi * xi;
    // cos(z) - 1 written as -2 sin^2(z/2) to avoid cancellation at small z
    const double s = std::sin(0.5 * z);
    const double bracket = z * specfun::sine_integral(z) - specfun::cin(z) - 2.0 * s * s;
    return std::sqrt(std::max(bracket, 0.0)) / pi;
}

double hs_crossing() {
    std::uintmax_t iterations = 200;
    const auto [lo, hi] = boost::math::tools::bisect(
        [](double xi) { return hs_bound(xi) - 1.0; }, 1.0, 2.0,
        boost::math::tools::eps_tolerance<double>(50), iterations);
    return 0.5 * (lo + hi);
}

double small_xi_expansion(double xi) {
    require_xi(xi, "small_xi_expansion");
    if (xi > kSmallXiMax)
        throw ArgumentError("small_xi_expansion: valid only for xi <= 0.5");
    const double r = pi * xi / 6.0;
    return xi * (1.0 - r * r);
}

double large_xi_leading_term(double xi) {
    require_xi(xi, "large_xi_leading_term");
    return pi * std::sqrt(8.0 * xi) * std::exp(-pi * xi);
}

double large_xi_asymptotic(double xi, CorrectionReading reading) {
    require_xi(xi, "large_xi_asymptotic");
    if (xi < kLargeXiMin) throw ArgumentError("large_xi_asymptotic: valid only for xi >= 2");
    const double c = 3.0 * pi / 64.0;
    const double correction = reading == CorrectionReading::InversePower ? c / xi : c * xi;
    return 1.0 - large_xi_leading_term(xi) * (1.0 - correction);
}

double erf_envelope(double xi) {
    require_xi(xi, "erf_envelope");
    return specfun::erf(0.5 * std::sqrt(pi) * xi);
}

EnvelopeScan scan_erf_envelope(double xi_max, double step) {
    if (!(step > 0.0) || !(xi_max >= step))
        throw ArgumentError("scan_erf_envelope: need 0 < step <= xi_max");
    EnvelopeScan scan{-1.0, 0.0, 2.0, 0.0};
    const int n = static_cast<int>(std::floor(xi_max / step + 1e-9));
    for (int i = 1; i <= n; ++i) {
        const double xi = i * step;
        const double d = erf_envelope(xi) - lambda0(xi);
        if (d > scan.max_deviation) scan.max_deviation = d, scan.argmax = xi;
        if (d < scan.min_deviation) scan.min_deviation = d, scan.argmin = xi;
    }
    return scan;
}

double leading_term_tail(double cutoff) {
    require_xi(cutoff, "leading_term_tail");
    // int_X^inf sqrt(x) e^{-a x} dx = sqrt(X) e^{-a X} / a + sqrt(pi) / (2 a^{3/2}) erfc(sqrt(a X))
    const double a = pi;
    const double inner = std::sqrt(cutoff) * std::exp(-a * cutoff) / a +
                         std::sqrt(pi) / (2.0 * a * std::sqrt(a)) * std::erfc(std::sqrt(a * cutoff));
    return pi * std::sqrt(8.0) * inner;
}

TailIntegral tail_integral(double upper_cutoff, double grid_step) {
    if (!(upper_cutoff >= 6.0) || !std::isfinite(upper_cutoff))
        throw ArgumentError("tail_integral: upper_cutoff must be >= 6");
    if (!(grid_step > 0.0 && grid_step <= 0.05))
        throw ArgumentError("tail_integral: grid_step must lie in (0, 0.05]");

    int n = static_cast<int>(std::ceil(upper_cutoff / grid_step - 1e-9));
    n = (n + 3) / 4 * 4;
    const double h = upper_cutoff / n;

    std::vector<double> f(n + 1);
    for (int i = 0; i <= n; ++i) f[i] = 1.0 - lambda0(i * h);

    // Simpson at step h and 2h, summed in index order
    auto simpson = [&](int stride) {
        double sum = f[0] + f[n];
        for (int i = stride, k = 1; i < n; i += stride, ++k) sum += (k % 2 == 1 ? 4.0 : 2.0) * f[i];
        return sum * stride * h / 3.0;
    };
    const double fine = simpson(1);
    const double coarse = simpson(2);
    const double tail = leading_term_tail(upper_cutoff);
    // the dropped (3 pi / 64) / xi correction bounds the tail's relative error
    const double tail_error = tail * (3.0 * pi / 64.0) / upper_cutoff;
    return {fine + tail, std::abs(fine - coarse) / 15.0 + tail_error, fine, tail, n};
}

double time_delay_xi(double mass, double delay, double dq, double dq_prime, double h) {
    for (double v : {mass, delay, dq, dq_prime, h})
        if (!(v > 0.0) || !std::isfinite(v))
            throw ArgumentError("time_delay_xi: all arguments must be positive and finite");
    return mass / delay * dq * dq_prime / h;
}

BoundReport bound_report(double xi) {
    require_xi(xi, "bound_report");
    BoundReport r{xi, lambda0(xi), trace_bound(xi), hs_bound(xi), std::nullopt, std::nullopt, erf_envelope(xi)};
    if (xi <= kSmallXiMax) r.small_xi = small_xi_expansion(xi);
    if (xi >= kLargeXiMin) r.large_xi = large_xi_asymptotic(xi);
    return r;
}

} // namespace seqbound
