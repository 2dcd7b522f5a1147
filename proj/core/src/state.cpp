#include "seqbound/state.hpp"

#include "seqbound/errors.hpp"

#include <cmath>
#include <random>
#include <string>

namespace seqbound {

PrecisionPair::PrecisionPair(double dq_, double dk_, double h_) : dq(dq_), dk(dk_), h(h_) {
    if (!(dq > 0.0) || !(dk > 0.0) || !(h > 0.0) || !std::isfinite(dq) || !std::isfinite(dk) || !std::isfinite(h))
        throw ArgumentError("PrecisionPair: dq, dk and h must be positive and finite");
}

Window::Window(double c, double w) : center(c), width(w) {
    if (!std::isfinite(c) || !(w > 0.0) || !std::isfinite(w))
        throw ArgumentError("Window: center must be finite and width positive");
}

namespace {

std::vector<double> component(const std::vector<Complex>& s, bool imag) {
    std::vector<double> out(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) out[i] = imag ? s[i].imag() : s[i].real();
    return out;
}

// Runs before the splines are built; they reject non-finite input with a logic_error.
double checked_spacing(double x_min, double x_max, const std::vector<Complex>& samples) {
    if (!std::isfinite(x_min) || !std::isfinite(x_max) || !(x_min < x_max))
        throw ArgumentError("StateGrid: need finite x_min < x_max");
    for (const auto& z : samples)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw ArgumentError("StateGrid: samples must be finite");
    const std::size_t n = samples.size();
    if (n < kMinStateSamples)
        throw ArgumentError("StateGrid: at least " + std::to_string(kMinStateSamples) + " samples required");
    return (x_max - x_min) / static_cast<double>(n - 1);
}

} // namespace

StateGrid::StateGrid(double x_min, double x_max, std::vector<Complex> samples, double carrier)
    : x_min_(x_min), x_max_(x_max), spacing_(checked_spacing(x_min, x_max, samples)),
      carrier_(carrier), samples_(std::move(samples)),
      re_([&] {
          auto v = component(samples_, false);
          return boost::math::interpolators::cardinal_cubic_b_spline<double>(v.begin(), v.end(), x_min_, spacing_);
      }()),
      im_([&] {
          auto v = component(samples_, true);
          return boost::math::interpolators::cardinal_cubic_b_spline<double>(v.begin(), v.end(), x_min_, spacing_);
      }()) {
    if (!std::isfinite(carrier)) throw ArgumentError("StateGrid: carrier must be finite");
    if (!(trapezoid_norm_squared() > 0.0)) throw ArgumentError("StateGrid: state has zero norm");
}

Complex StateGrid::value_at(double x) const {
    if (x < x_min_ || x > x_max_) return {0.0, 0.0};
    const Complex s(re_(x), im_(x));
    if (carrier_ == 0.0) return s;
    return s * std::polar(1.0, carrier_ * x);
}

std::vector<Complex> StateGrid::baked_samples() const {
    if (carrier_ == 0.0) return samples_;
    std::vector<Complex> out(samples_.size());
    for (std::size_t i = 0; i < samples_.size(); ++i)
        out[i] = samples_[i] * std::polar(1.0, carrier_ * sample_x(i));
    return out;
}

double StateGrid::trapezoid_norm_squared() const {
    double sum = 0.5 * (std::norm(samples_.front()) + std::norm(samples_.back()));
    for (std::size_t i = 1; i + 1 < samples_.size(); ++i) sum += std::norm(samples_[i]);
    return sum * spacing_;
}

std::vector<double> StateGrid::knots_between(double a, double b) const {
    std::vector<double> out;
    const auto n = static_cast<long>(samples_.size());
    long first = static_cast<long>(std::floor((a - x_min_) / spacing_)) + 1;
    for (long i = std::max(first, 0L); i < n; ++i) {
        const double x = sample_x(static_cast<std::size_t>(i));
        if (x >= b) break;
        if (x > a) out.push_back(x);
    }
    return out;
}

StateGrid StateGrid::translated(double q) const {
    // exp(i c (x - q)) s(x - q): the carrier phase at the old origin moves into the samples
    std::vector<Complex> s = samples_;
    if (carrier_ != 0.0) {
        const Complex phase = std::polar(1.0, -carrier_ * q);
        for (auto& z : s) z *= phase;
    }
    return StateGrid(x_min_ + q, x_max_ + q, std::move(s), carrier_);
}

StateGrid StateGrid::modulated(double wavenumber) const {
    return StateGrid(x_min_, x_max_, samples_, carrier_ + wavenumber);
}

StateGrid gaussian_state(double sigma_x, const GaussianGrid& grid) {
    if (!(sigma_x > 0.0) || !std::isfinite(sigma_x)) throw ArgumentError("gaussian_state: sigma_x must be positive");
    if (!(grid.extent >= 10.0 * sigma_x))
        throw ArgumentError("gaussian_state: grid extent must be at least 10 sigma_x");
    const double x0 = -0.5 * grid.extent;
    const double dx = grid.extent / static_cast<double>(grid.samples - 1);
    const double norm = std::pow(2.0 * std::numbers::pi * sigma_x * sigma_x, -0.25);
    std::vector<Complex> s(grid.samples);
    for (std::size_t i = 0; i < grid.samples; ++i) {
        const double x = x0 + dx * static_cast<double>(i);
        s[i] = norm * std::exp(-x * x / (4.0 * sigma_x * sigma_x));
    }
    // renormalize on the grid: the tails beyond it carry up to ~6e-7 at extent 10 sigma
    const double on_grid = StateGrid(x0, -x0, s).trapezoid_norm_squared();
    for (auto& z : s) z /= std::sqrt(on_grid);
    return StateGrid(x0, -x0, std::move(s));
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    // splitmix64 finalizer over the combined value
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

StateGrid random_state(double x_min, double x_max, std::size_t samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<Complex> raw(samples + 4);
    for (auto& z : raw) {
        const double re = normal(rng);
        z = Complex(re, normal(rng));
    }
    std::vector<Complex> s(samples);
    for (std::size_t i = 0; i < samples; ++i)
        s[i] = (raw[i] + raw[i + 1] + raw[i + 2] + raw[i + 3] + raw[i + 4]) / 5.0;
    return StateGrid(x_min, x_max, std::move(s));
}

} // namespace seqbound
