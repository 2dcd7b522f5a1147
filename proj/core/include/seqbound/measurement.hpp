#pragma once

#include "seqbound/state.hpp"

#include <utility>

namespace seqbound {

/// Probability of a momentum outcome in `window_k` given a successful
/// position selection in `window_q`:
///   ||E_p(B) E_x(A) psi||^2 / ||E_x(A) psi||^2.
/// The numerator is computed by nested Gauss-Legendre quadrature: the
/// Fourier transform of the window-restricted state at each momentum
/// node, then |.|^2 integrated over the momentum window.
///
/// ArgumentError if window_q leaves the grid; PreconditionError if the
/// position selection has probability <= 1e-12.
double conditional_probability(const StateGrid& state, const Window& window_q, const Window& window_k,
                               double h = kDefaultAction);

/// Same quantity as a Rayleigh quotient <psi|G psi>_A / <psi|psi>_A with the
/// convolution kernel g_k(u) = exp(i k u / hbar) sin(dk u / 2 hbar) / (pi u),
/// evaluated as a double quadrature over window_q.
double rayleigh_quotient(const StateGrid& state, const Window& window_q, const Window& window_k,
                         double h = kDefaultAction);

/// Measurements in reversed order: probability of x in `window_q` given a
/// successful momentum selection in `window_k`,
///   ||E_x(A) E_p(B) psi||^2 / ||E_p(B) psi||^2.
/// PreconditionError if the momentum selection has probability <= 1e-12.
/// window_q need not lie inside the grid.
double reversed_order_probability(const StateGrid& state, const Window& window_k, const Window& window_q,
                                  double h = kDefaultAction);

// int_A |psi|^2 / ||psi||^2.
double position_selection_probability(const StateGrid& state, const Window& window_q);

// int_B |phi(p)|^2 dp / ||psi||^2.
double momentum_selection_probability(const StateGrid& state, const Window& window_k, double h = kDefaultAction);

// Diffraction by a slit of width dq: (2/pi) [Si(pi xi) - (2/pi) sin^2(pi xi / 2) / xi].
double slit_probability(double xi);

// |phi(p)|^2 = (2 hbar / (pi dq)) sin^2(dq p / (2 hbar)) / p^2 behind a slit of width dq.
double slit_momentum_density(double p, double dq, double hbar);

// Constant amplitude 1/sqrt(width) on [center - width/2, center + width/2].
StateGrid plane_wave_segment(double width, std::size_t samples, double center = 0.0);

struct OptimalStateOptions {
    double center = 0.0;      // q
    double width = 1.0;       // dq
    std::size_t samples = 513;
    double padding = 0.0;     // grid extends (1 + padding) dq / 2 either side of center
};

// The ground mode psi_0 of the sinc-kernel operator mapped onto the position
// window, sampled through its band-limited continuation and normalized to unit
// trapezoid norm; it attains lambda0(xi) with a momentum window of width
// xi h / dq centered at 0.
StateGrid optimal_state(double xi, const OptimalStateOptions& options = {});

/// Shift invariance of the conditional probability. Returns
/// (P(psi; A, B), P(U_k T_q psi; A + shift_q, B + shift_k)).
std::pair<double, double> invariance_check(const StateGrid& state, const Window& window_q, const Window& window_k,
                                           double shift_q, double shift_k, double h = kDefaultAction);

} // namespace seqbound
