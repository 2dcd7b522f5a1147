#include "seqbound/measurement.hpp"

#include "seqbound/errors.hpp"
#include "seqbound/quadrature.hpp"
#include "seqbound/specfun.hpp"
#include "seqbound/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

namespace seqbound {

using std::numbers::pi;

namespace {

// Panel phase budget and points per panel; 8-point Gauss-Legendre on a
// panel of phase <= 1.5 integrates exp(i w x) times a cubic to ~1e-15.
constexpr double kPanelPhase = 1.5;
constexpr int kPanelPoints = 8;
constexpr double kSelectionFloor = 1e-12;

struct SampledNodes {
    std::vector<double> x;
    std::vector<double> w;
    std::vector<Complex> psi;
};

void require_action(double h) {
    if (!(h > 0.0) || !std::isfinite(h)) throw ArgumentError("action constant h must be positive and finite");
}

// Composite rule on [a, b] with breaks at the grid knots, each cell split so
// that `omega` times the panel width stays within the phase budget.
SampledNodes state_nodes(const StateGrid& state, double a, double b, double omega) {
    std::vector<double> cells{a};
    for (double k : state.knots_between(a, b)) cells.push_back(k);
    cells.push_back(b);
    std::vector<double> breaks{a};
    for (std::size_t j = 0; j + 1 < cells.size(); ++j) {
        const double len = cells[j + 1] - cells[j];
        const int pieces = std::max(1, static_cast<int>(std::ceil(omega * len / kPanelPhase)));
        for (int p = 1; p < pieces; ++p) breaks.push_back(cells[j] + len * p / pieces);
        breaks.push_back(cells[j + 1]);
    }
    auto rule = composite_rule(breaks, kPanelPoints);
    SampledNodes out{std::move(rule.points), std::move(rule.weights), {}};
    out.psi.reserve(out.x.size());
    for (double x : out.x) out.psi.push_back(state.value_at(x));
    return out;
}

// Equal panels on [a, b] for an integrand whose phase rate is <= omega.
PanelNodes smooth_nodes(double a, double b, double omega) {
    const int panels = std::max(2, static_cast<int>(std::ceil(omega * (b - a) / kPanelPhase)));
    return composite_rule(a, b, panels, kPanelPoints);
}

double norm_squared(const SampledNodes& n) {
    double sum = 0.0;
    for (std::size_t i = 0; i < n.x.size(); ++i) sum += n.w[i] * std::norm(n.psi[i]);
    return sum;
}

double full_norm_squared(const StateGrid& state) {
    return norm_squared(state_nodes(state, state.x_min(), state.x_max(), 0.0));
}

void require_inside(const StateGrid& state, const Window& w, const char* where) {
    const double slack = 1e-12 * std::max({1.0, std::abs(state.x_min()), std::abs(state.x_max())});
    if (w.lower() < state.x_min() - slack || w.upper() > state.x_max() + slack)
        throw ArgumentError(std::string(where) + ": position window [" + std::to_string(w.lower()) + ", " +
                            std::to_string(w.upper()) + "] lies outside the state grid [" +
                            std::to_string(state.x_min()) + ", " + std::to_string(state.x_max()) + "]");
}

// Largest phase rate of psi(x) exp(-i p x / hbar) for p in the momentum window.
double position_phase_rate(const StateGrid& state, const Window& wk, double hbar) {
    return std::abs(state.carrier() - wk.center / hbar) + 0.5 * wk.width / hbar;
}

// (1/sqrt(2 pi hbar)) sum_x w psi(x) exp(-i p x / hbar)
Complex fourier_at(const SampledNodes& n, double p, double hbar) {
    Complex sum{0.0, 0.0};
    for (std::size_t i = 0; i < n.x.size(); ++i) sum += n.w[i] * n.psi[i] * std::polar(1.0, -p * n.x[i] / hbar);
    return sum / std::sqrt(2.0 * pi * hbar);
}

// Momentum-window projector kernel g_k(u) = exp(i k u / hbar) sin(dk u / 2 hbar) / (pi u).
Complex projector_kernel(const Window& wk, double hbar, double u) {
    const double half = 0.5 * wk.width / hbar;
    const double magnitude = half / pi * specfun::sinc(half * u);
    return std::polar(magnitude, wk.center * u / hbar);
}

struct Selection {
    SampledNodes nodes;
    double selected;  // int_A |psi|^2
};

Selection select_position(const StateGrid& state, const Window& wq, const Window& wk, double h, const char* where) {
    require_action(h);
    require_inside(state, wq, where);
    const double hbar = h / (2.0 * pi);
    const double a = std::max(wq.lower(), state.x_min());
    const double b = std::min(wq.upper(), state.x_max());
    Selection s{state_nodes(state, a, b, position_phase_rate(state, wk, hbar)), 0.0};
    s.selected = norm_squared(s.nodes);
    const double total = full_norm_squared(state);
    if (!(s.selected > kSelectionFloor * total))
        throw PreconditionError("position selection has approximately zero probability (" +
                                std::to_string(s.selected / total) + ")");
    return s;
}

} // namespace

double position_selection_probability(const StateGrid& state, const Window& wq) {
    const double a = std::max(wq.lower(), state.x_min());
    const double b = std::min(wq.upper(), state.x_max());
    if (!(b > a)) return 0.0;
    return norm_squared(state_nodes(state, a, b, 0.0)) / full_norm_squared(state);
}

double conditional_probability(const StateGrid& state, const Window& wq, const Window& wk, double h) {
    const Selection sel = select_position(state, wq, wk, h, "conditional_probability");
    const double hbar = h / (2.0 * pi);
    // |phi(p)|^2 oscillates at rates up to width(A) / hbar
    const double extent = sel.nodes.x.empty() ? 0.0 : wq.width;
    const PanelNodes momenta = smooth_nodes(wk.lower(), wk.upper(), extent / hbar);
    double numerator = 0.0;
    for (std::size_t j = 0; j < momenta.points.size(); ++j)
        numerator += momenta.weights[j] * std::norm(fourier_at(sel.nodes, momenta.points[j], hbar));
    return numerator / sel.selected;
}

double rayleigh_quotient(const StateGrid& state, const Window& wq, const Window& wk, double h) {
    const Selection sel = select_position(state, wq, wk, h, "rayleigh_quotient");
    const double hbar = h / (2.0 * pi);
    const auto& n = sel.nodes;
    const std::size_t m = n.x.size();
    std::vector<Complex> a(m);
    for (std::size_t i = 0; i < m; ++i) a[i] = n.w[i] * n.psi[i];
    // Hermitian kernel: diagonal plus twice the real part of the lower triangle
    const double g0 = projector_kernel(wk, hbar, 0.0).real();
    double diagonal = 0.0;
    double off = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        diagonal += std::norm(a[i]) * g0;
        Complex row{0.0, 0.0};
        for (std::size_t j = 0; j < i; ++j) row += projector_kernel(wk, hbar, n.x[i] - n.x[j]) * a[j];
        off += (std::conj(a[i]) * row).real();
    }
    return (diagonal + 2.0 * off) / sel.selected;
}

double momentum_selection_probability(const StateGrid& state, const Window& wk, double h) {
    require_action(h);
    const double hbar = h / (2.0 * pi);
    const SampledNodes grid = state_nodes(state, state.x_min(), state.x_max(), position_phase_rate(state, wk, hbar));
    const PanelNodes momenta = smooth_nodes(wk.lower(), wk.upper(), (state.x_max() - state.x_min()) / hbar);
    double selected = 0.0;
    for (std::size_t j = 0; j < momenta.points.size(); ++j)
        selected += momenta.weights[j] * std::norm(fourier_at(grid, momenta.points[j], hbar));
    return selected / norm_squared(grid);
}

double reversed_order_probability(const StateGrid& state, const Window& wk, const Window& wq, double h) {
    require_action(h);
    const double hbar = h / (2.0 * pi);
    const SampledNodes grid = state_nodes(state, state.x_min(), state.x_max(), position_phase_rate(state, wk, hbar));
    const double total = norm_squared(grid);

    // Denominator: |phi|^2 over the momentum window, phi by quadrature Fourier transform.
    const PanelNodes momenta = smooth_nodes(wk.lower(), wk.upper(), (state.x_max() - state.x_min()) / hbar);
    double selected = 0.0;
    for (std::size_t j = 0; j < momenta.points.size(); ++j)
        selected += momenta.weights[j] * std::norm(fourier_at(grid, momenta.points[j], hbar));
    if (!(selected > kSelectionFloor * total))
        throw PreconditionError("momentum selection has approximately zero probability (" +
                                std::to_string(selected / total) + ")");

    // Numerator: chi = E_p(B) psi = g_k * psi, a convolution over the state's
    // support; |chi|^2 varies at rates up to dk / hbar on the position window.
    const PanelNodes positions = smooth_nodes(wq.lower(), wq.upper(), wk.width / hbar);
    std::vector<Complex> a(grid.x.size());
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = grid.w[i] * grid.psi[i];
    double numerator = 0.0;
    for (std::size_t i = 0; i < positions.points.size(); ++i) {
        const double x = positions.points[i];
        Complex chi{0.0, 0.0};
        for (std::size_t j = 0; j < a.size(); ++j) chi += projector_kernel(wk, hbar, x - grid.x[j]) * a[j];
        numerator += positions.weights[i] * std::norm(chi);
    }
    return numerator / selected;
}

double slit_probability(double xi) {
    if (!(xi >= 0.0) || !std::isfinite(xi)) throw ArgumentError("slit_probability: xi must be finite and >= 0");
    if (xi == 0.0) return 0.0;
    const double s = std::sin(0.5 * pi * xi);
    return 2.0 / pi * (specfun::sine_integral(pi * xi) - 2.0 / pi * s * s / xi);
}

double slit_momentum_density(double p, double dq, double hbar) {
    if (!(dq > 0.0) || !(hbar > 0.0)) throw ArgumentError("slit_momentum_density: dq and hbar must be positive");
    const double s = specfun::sinc(0.5 * dq * p / hbar);
    return dq / (2.0 * pi * hbar) * s * s;
}

StateGrid plane_wave_segment(double width, std::size_t samples, double center) {
    if (!(width > 0.0)) throw ArgumentError("plane_wave_segment: width must be positive");
    std::vector<Complex> s(samples, Complex(1.0 / std::sqrt(width), 0.0));
    return StateGrid(center - 0.5 * width, center + 0.5 * width, std::move(s));
}

StateGrid optimal_state(double xi, const OptimalStateOptions& options) {
    if (!(xi > 0.0) || !std::isfinite(xi)) throw ArgumentError("optimal_state: xi must be positive");
    if (!(options.width > 0.0) || !(options.padding >= 0.0))
        throw ArgumentError("optimal_state: width must be positive and padding non-negative");
    const ConvergedSpectrum spectrum = solve_converged(xi, 1);
    const double half = 0.5 * options.width;
    const double reach = half * (1.0 + options.padding);
    const std::size_t n = options.samples;
    if (n < kMinStateSamples) throw ArgumentError("optimal_state: too few samples");
    std::vector<Complex> s(n);
    // mirror-symmetric sampling so the stored state is exactly even
    for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
        const double u = (1.0 + options.padding) * (-1.0 + 2.0 * static_cast<double>(i) / static_cast<double>(n - 1));
        const double v = eigenfunction_extend(spectrum.result, 0, u);
        s[i] = v;
        s[n - 1 - i] = v;
    }
    StateGrid raw(options.center - reach, options.center + reach, s);
    const double scale = 1.0 / std::sqrt(raw.trapezoid_norm_squared());
    for (auto& z : s) z *= scale;
    return StateGrid(options.center - reach, options.center + reach, std::move(s));
}

std::pair<double, double> invariance_check(const StateGrid& state, const Window& wq, const Window& wk,
                                           double shift_q, double shift_k, double h) {
    require_action(h);
    const double hbar = h / (2.0 * pi);
    const double base = conditional_probability(state, wq, wk, h);
    const StateGrid moved = state.translated(shift_q).modulated(shift_k / hbar);
    const double shifted = conditional_probability(moved, wq.shifted(shift_q), wk.shifted(shift_k), h);
    return {base, shifted};
}

} // namespace seqbound
