#include "seqbound/spectrum.hpp"

#include "seqbound/errors.hpp"
#include "seqbound/specfun.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

namespace seqbound {

namespace {

constexpr double kInterpolationFloor = 1e-13;

void require_xi(double xi, const char* where) {
    if (!(xi >= 0.0) || !std::isfinite(xi))
        throw ArgumentError(std::string(where) + ": xi must be finite and >= 0");
}

} // namespace

double kernel_eval(double xi, double u) {
    require_xi(xi, "kernel_eval");
    const double half_xi = 0.5 * xi;
    return half_xi * specfun::sinc(std::numbers::pi * half_xi * u);
}

double kernel_derivative(double xi, double u) {
    require_xi(xi, "kernel_derivative");
    const double c = 0.5 * std::numbers::pi * xi;
    return 0.5 * xi * c * specfun::sinc_derivative(c * u);
}

Eigen::MatrixXd build_operator(double xi, const QuadratureRule& rule) {
    require_xi(xi, "build_operator");
    const auto n = static_cast<Eigen::Index>(rule.order());
    const auto x = rule.nodes();
    const auto w = rule.weights();
    Eigen::MatrixXd m(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const double si = std::sqrt(w[i]);
        m(i, i) = w[i] * 0.5 * xi;
        for (Eigen::Index j = 0; j < i; ++j) {
            const double v = si * kernel_eval(xi, x[i] - x[j]) * std::sqrt(w[j]);
            m(i, j) = v;
            m(j, i) = v;
        }
    }
    return m;
}

SpectralResult::SpectralResult(double xi, QuadratureRule rule, std::vector<double> eigenvalues,
                               std::vector<std::vector<double>> eigenfunctions)
    : xi_(xi), rule_(std::move(rule)), eigenvalues_(std::move(eigenvalues)),
      eigenfunctions_(std::move(eigenfunctions)) {
    if (!eigenfunctions_.empty() && eigenfunctions_.size() != eigenvalues_.size())
        throw ArgumentError("SpectralResult: eigenfunction count must match eigenvalue count");
}

std::span<const double> SpectralResult::eigenfunction(std::size_t n) const {
    if (n >= eigenfunctions_.size())
        throw ArgumentError("SpectralResult: eigenfunction index " + std::to_string(n) + " not available");
    return eigenfunctions_[n];
}

namespace {

void check_solver(const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>& solver, double xi, int order) {
    if (solver.info() != Eigen::Success) {
        std::ostringstream diag;
        diag << "xi=" << xi << " order=" << order << " eigen info=" << static_cast<int>(solver.info());
        throw NumericError("sinc-kernel eigensolver did not converge", diag.str());
    }
}

// Project onto the dominant parity, then fix the sign: even modes positive
// near x = 1, odd modes positive slope at 0. The projection matters at large
// xi, where lambda_0 and lambda_1 are close enough for the solver to mix them.
void fix_parity_and_sign(std::vector<double>& psi, double lambda, double xi, const QuadratureRule& rule) {
    const auto x = rule.nodes();
    const auto w = rule.weights();
    const std::size_t n = psi.size();
    double parity = 0.0;
    for (std::size_t i = 0; i < n; ++i) parity += w[i] * psi[i] * psi[n - 1 - i];
    const double mirror = parity >= 0.0 ? 1.0 : -1.0;
    std::vector<double> projected(n);
    for (std::size_t i = 0; i < n; ++i) projected[i] = 0.5 * (psi[i] + mirror * psi[n - 1 - i]);
    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) norm += w[i] * projected[i] * projected[i];
    const double scale = 1.0 / std::sqrt(norm);
    for (std::size_t i = 0; i < n; ++i) psi[i] = projected[i] * scale;
    double indicator;
    if (parity >= 0.0) {
        indicator = psi[n - 1];
    } else {
        indicator = 0.0;
        for (std::size_t j = 0; j < n; ++j) indicator += w[j] * kernel_derivative(xi, -x[j]) * psi[j];
        indicator /= lambda;
    }
    if (indicator < 0.0)
        for (double& v : psi) v = -v;
}

} // namespace

SpectralResult top_eigenvalues(double xi, int order, int count) {
    require_xi(xi, "top_eigenvalues");
    if (count < 1) throw ArgumentError("top_eigenvalues: count must be positive");
    if (count > order)
        throw ArgumentError("top_eigenvalues: count (" + std::to_string(count) +
                            ") exceeds order (" + std::to_string(order) + ")");
    QuadratureRule rule = gauss_legendre(order);
    if (xi == 0.0) return SpectralResult(0.0, std::move(rule), std::vector<double>(count, 0.0), {});

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(build_operator(xi, rule));
    check_solver(solver, xi, order);
    const auto& values = solver.eigenvalues();
    const auto& vectors = solver.eigenvectors();

    std::vector<double> lambdas(count);
    std::vector<std::vector<double>> functions(count, std::vector<double>(order));
    const auto w = rule.weights();
    for (int k = 0; k < count; ++k) {
        const Eigen::Index col = order - 1 - k;
        lambdas[k] = values(col);
        for (int i = 0; i < order; ++i) functions[k][i] = vectors(i, col) / std::sqrt(w[i]);
        fix_parity_and_sign(functions[k], lambdas[k], xi, rule);
    }
    return SpectralResult(xi, std::move(rule), std::move(lambdas), std::move(functions));
}

std::vector<double> all_eigenvalues(double xi, int order) {
    require_xi(xi, "all_eigenvalues");
    if (xi == 0.0) return std::vector<double>(order, 0.0);
    const QuadratureRule rule = gauss_legendre(order);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(build_operator(xi, rule), Eigen::EigenvaluesOnly);
    check_solver(solver, xi, order);
    std::vector<double> out(solver.eigenvalues().data(), solver.eigenvalues().data() + order);
    std::reverse(out.begin(), out.end());
    return out;
}

int default_start_order(double xi) {
    return std::max(64, static_cast<int>(std::ceil(40.0 + 10.0 * xi)));
}

namespace {

template <typename Eval>
std::vector<ConvergenceStep> double_until_converged(double xi, const ConvergenceOptions& options, int min_order,
                                                    Eval&& eval, double& last_change) {
    int order = options.start_order > 0 ? options.start_order : default_start_order(xi);
    order = std::clamp(std::max(order, min_order), 1, options.max_order);
    std::vector<ConvergenceStep> history;
    history.push_back({order, eval(order)});
    while (true) {
        const int next = std::min(2 * order, options.max_order);
        if (next == order) {
            std::ostringstream diag;
            diag << "xi=" << xi << " history:";
            for (const auto& s : history) diag << " [" << s.order << ": " << s.lambda0 << "]";
            throw NumericError("lambda0 did not converge before reaching the maximum order", diag.str());
        }
        history.push_back({next, eval(next)});
        last_change = std::abs(history.back().lambda0 - history[history.size() - 2].lambda0);
        if (last_change <= options.tolerance) return history;
        order = next;
    }
}

} // namespace

ConvergedSpectrum solve_converged(double xi, int count, const ConvergenceOptions& options) {
    require_xi(xi, "solve_converged");
    if (xi == 0.0) {
        const int order = std::max(count, 1);
        return {top_eigenvalues(0.0, order, count), {{order, 0.0}}, 0.0};
    }
    double change = 0.0;
    auto history = double_until_converged(
        xi, options, count, [&](int order) { return all_eigenvalues(xi, order).front(); }, change);
    return {top_eigenvalues(xi, history.back().order, count), std::move(history), change};
}

double lambda0(double xi, const ConvergenceOptions& options) {
    require_xi(xi, "lambda0");
    if (xi == 0.0) return 0.0;
    double change = 0.0;
    auto history = double_until_converged(
        xi, options, 1, [&](int order) { return all_eigenvalues(xi, order).front(); }, change);
    return history.back().lambda0;
}

double eigenfunction_extend(const SpectralResult& result, std::size_t n, double x) {
    if (n >= result.count()) throw ArgumentError("eigenfunction_extend: mode index out of range");
    const double lambda = result.eigenvalues()[n];
    if (!(lambda > kInterpolationFloor))
        throw NumericError("eigenfunction interpolation is ill-posed for eigenvalue below 1e-13",
                           "lambda_" + std::to_string(n) + "=" + std::to_string(lambda));
    const auto psi = result.eigenfunction(n);
    const auto nodes = result.rule().nodes();
    const auto w = result.rule().weights();
    double sum = 0.0;
    for (std::size_t j = 0; j < nodes.size(); ++j) sum += w[j] * kernel_eval(result.xi(), x - nodes[j]) * psi[j];
    return sum / lambda;
}

double eigenfunction_interpolate(const SpectralResult& result, std::size_t n, double x) {
    if (!(x >= -1.0 && x <= 1.0)) throw ArgumentError("eigenfunction_interpolate: x must lie in [-1, 1]");
    return eigenfunction_extend(result, n, x);
}

} // namespace seqbound
