#pragma once

#include <boost/math/interpolators/cardinal_cubic_b_spline.hpp>

#include <complex>
#include <cstdint>
#include <numbers>
#include <span>
#include <vector>

namespace seqbound {

using Complex = std::complex<double>;

inline constexpr double kDefaultAction = 2.0 * std::numbers::pi;  // h with hbar = 1

/// Physical precisions of the position and momentum selections.
struct PrecisionPair {
    double dq;
    double dk;
    double h = kDefaultAction;

    PrecisionPair(double dq, double dk, double h = kDefaultAction);
    double xi() const noexcept { return dk * dq / h; }
    double hbar() const noexcept { return h / (2.0 * std::numbers::pi); }
};

/// Interval of width `width` around `center`. Treated as closed by quadrature.
struct Window {
    double center;
    double width;

    Window(double center, double width);
    double lower() const noexcept { return center - 0.5 * width; }
    double upper() const noexcept { return center + 0.5 * width; }
    Window shifted(double by) const { return {center + by, width}; }
};

/// Wave function sampled on a uniform grid that includes both endpoints.
///
/// Between samples the state is the cubic B-spline interpolant of the real
/// and imaginary parts, optionally multiplied by a plane-wave carrier:
/// psi(x) = exp(i carrier x) s(x), with `carrier` a wavenumber (k / hbar).
/// The state vanishes outside [x_min, x_max].
class StateGrid {
public:
    StateGrid(double x_min, double x_max, std::vector<Complex> samples, double carrier = 0.0);

    double x_min() const noexcept { return x_min_; }
    double x_max() const noexcept { return x_max_; }
    double spacing() const noexcept { return spacing_; }
    double carrier() const noexcept { return carrier_; }
    std::span<const Complex> samples() const noexcept { return samples_; }
    std::size_t size() const noexcept { return samples_.size(); }
    double sample_x(std::size_t i) const noexcept { return x_min_ + spacing_ * static_cast<double>(i); }

    // Interpolated value; zero outside the grid.
    Complex value_at(double x) const;

    // Samples with the carrier multiplied in, as stored in a state file.
    std::vector<Complex> baked_samples() const;

    // Trapezoid rule over the samples.
    double trapezoid_norm_squared() const;

    // Grid nodes strictly inside (a, b), i.e. the spline knots there.
    std::vector<double> knots_between(double a, double b) const;

    // (T_q psi)(x) = psi(x - q): grid and samples move together.
    StateGrid translated(double q) const;

    // (U_k psi)(x) = exp(i k x / hbar) psi(x), with wavenumber = k / hbar.
    StateGrid modulated(double wavenumber) const;

private:
    double x_min_;
    double x_max_;
    double spacing_;
    double carrier_;
    std::vector<Complex> samples_;
    boost::math::interpolators::cardinal_cubic_b_spline<double> re_;
    boost::math::interpolators::cardinal_cubic_b_spline<double> im_;
};

inline constexpr std::size_t kMinStateSamples = 16;

struct GaussianGrid {
    double extent;         // grid covers [-extent/2, extent/2]
    std::size_t samples;
};

// Minimum-uncertainty Gaussian with position spread sigma_x, centered at 0,
// scaled to unit trapezoid norm on the grid.
// ArgumentError unless extent >= 10 sigma_x.
StateGrid gaussian_state(double sigma_x, const GaussianGrid& grid);

// Random ensemble member: i.i.d. standard normal real and imaginary parts,
// smoothed by a 5-point moving average. Deterministic in `seed`.
StateGrid random_state(double x_min, double x_max, std::size_t samples, std::uint64_t seed);

// Per-trial seed derived from (seed, index); independent of evaluation order.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

} // namespace seqbound
