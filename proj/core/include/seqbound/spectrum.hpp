#pragma once

#include "seqbound/quadrature.hpp"

#include <Eigen/Core>

#include <cstddef>
#include <span>
#include <vector>

namespace seqbound {

/// Sinc kernel K(u) = sin(pi xi u / 2) / (pi u) of the concentration operator on (-1, 1).
/// K(0) = xi / 2. Throws ArgumentError for xi < 0.
double kernel_eval(double xi, double u);

// d/du K(u); used for the sign convention of odd modes.
double kernel_derivative(double xi, double u);

// Symmetrized Nystrom matrix M_ij = sqrt(w_i) K(x_i - x_j) sqrt(w_j).
Eigen::MatrixXd build_operator(double xi, const QuadratureRule& rule);

/// Leading eigenpairs of the sinc-kernel operator at one discretization order.
///
/// Eigenvalues are sorted descending. Eigenfunction n is stored as its values
/// at the quadrature nodes, normalized so that sum_i w_i psi_n(x_i)^2 = 1.
/// Even modes are positive at the node closest to x = 1; odd modes have
/// positive slope at x = 0. At xi = 0 all eigenvalues are zero and no
/// eigenfunctions are stored.
class SpectralResult {
public:
    SpectralResult(double xi, QuadratureRule rule, std::vector<double> eigenvalues,
                   std::vector<std::vector<double>> eigenfunctions);

    double xi() const noexcept { return xi_; }
    int order() const noexcept { return static_cast<int>(rule_.order()); }
    const QuadratureRule& rule() const noexcept { return rule_; }
    std::span<const double> eigenvalues() const noexcept { return eigenvalues_; }
    std::size_t count() const noexcept { return eigenvalues_.size(); }
    bool has_eigenfunctions() const noexcept { return !eigenfunctions_.empty(); }
    std::span<const double> eigenfunction(std::size_t n) const;

private:
    double xi_;
    QuadratureRule rule_;
    std::vector<double> eigenvalues_;
    std::vector<std::vector<double>> eigenfunctions_;
};

// `count` largest eigenpairs with a Gauss-Legendre rule of the given order.
// Throws ArgumentError if count > order, NumericError if the eigensolver fails.
SpectralResult top_eigenvalues(double xi, int order, int count);

// All eigenvalues, descending, without eigenvectors.
std::vector<double> all_eigenvalues(double xi, int order);

struct ConvergenceOptions {
    double tolerance = 1e-10;
    int start_order = 0;  // 0 selects max(64, ceil(40 + 10 xi))
    int max_order = kMaxQuadratureOrder;
};

struct ConvergenceStep {
    int order;
    double lambda0;
};

struct ConvergedSpectrum {
    SpectralResult result;
    std::vector<ConvergenceStep> history;
    double last_change;  // |lambda0(order) - lambda0(order / 2)|
};

int default_start_order(double xi);

// Doubles the order until successive lambda0 agree to `tolerance`.
// NumericError if `max_order` is reached first.
ConvergedSpectrum solve_converged(double xi, int count, const ConvergenceOptions& options = {});

/// Largest eigenvalue lambda0(xi), the least upper bound on the conditional
/// probability of a momentum selection following a position selection.
double lambda0(double xi, const ConvergenceOptions& options = {});

// Nystrom interpolant psi_n(x) = (1/lambda_n) sum_j w_j K(x - x_j) psi_n(x_j), x in [-1, 1].
// NumericError if lambda_n <= 1e-13.
double eigenfunction_interpolate(const SpectralResult& result, std::size_t n, double x);

// Same formula without the domain restriction: the band-limited continuation
// of psi_n to the whole line.
double eigenfunction_extend(const SpectralResult& result, std::size_t n, double x);

} // namespace seqbound
