#pragma once

#include <optional>

namespace seqbound {

// Operator trace, equal to xi; lambda0 never exceeds it.
double trace_bound(double xi);

/// Hilbert-Schmidt norm of the concentration operator, in closed form:
///   (1/pi) [2 pi xi Si(2 pi xi) - Cin(2 pi xi) + cos(2 pi xi) - 1]^(1/2).
double hs_bound(double xi);

// Root of hs_bound(xi) = 1, i.e. the largest xi at which the bound is non-trivial.
double hs_crossing();

inline constexpr double kSmallXiMax = 0.5;
inline constexpr double kLargeXiMin = 2.0;

// xi [1 - (pi xi / 6)^2]; ArgumentError outside [0, kSmallXiMax].
double small_xi_expansion(double xi);

// How the first correction of the large-xi expansion is read.
enum class CorrectionReading {
    InversePower,  // 1 - (3 pi / 64) / xi   (adopted)
    AsPrinted,     // 1 - (3 pi / 64) * xi
};

// pi sqrt(8 xi) exp(-pi xi); leading behaviour of 1 - lambda0.
double large_xi_leading_term(double xi);

// 1 - pi sqrt(8 xi) e^{-pi xi} [1 - correction]; ArgumentError for xi < kLargeXiMin.
double large_xi_asymptotic(double xi, CorrectionReading reading = CorrectionReading::InversePower);

// erf(sqrt(pi)/2 xi): conjectured envelope lying slightly above lambda0.
double erf_envelope(double xi);

struct EnvelopeScan {
    double max_deviation;
    double argmax;
    double min_deviation;  // negative would falsify the envelope
    double argmin;
};

// Scans erf_envelope - lambda0 on xi = step, 2 step, ..., <= xi_max.
EnvelopeScan scan_erf_envelope(double xi_max = 5.0, double step = 0.05);

struct TailIntegral {
    double value;           // integral of 1 - lambda0 over [0, inf)
    double error_estimate;
    double head;            // numerical part over [0, cutoff]
    double tail;            // analytic closure beyond cutoff
    int intervals;
};

// Composite Simpson over lambda0 on [0, upper_cutoff] plus the closed-form
// integral of the leading large-xi term beyond it. The actual step is
// upper_cutoff / n with n the smallest multiple of 4 giving step <= grid_step.
// ArgumentError unless upper_cutoff >= 6 and 0 < grid_step <= 0.05.
TailIntegral tail_integral(double upper_cutoff = 8.0, double grid_step = 0.02);

// Integral of large_xi_leading_term over [cutoff, inf).
double leading_term_tail(double cutoff);

// (m / t) dq dq' / h: the parameter replacing xi for two position
// measurements separated by a delay t.
double time_delay_xi(double mass, double delay, double dq, double dq_prime, double h);

struct BoundReport {
    double xi;
    double lambda0;
    double trace_bound;
    double hs_bound;
    std::optional<double> small_xi;  // present when xi <= kSmallXiMax
    std::optional<double> large_xi;  // present when xi >= kLargeXiMin
    double erf_envelope;
};

BoundReport bound_report(double xi);

} // namespace seqbound
