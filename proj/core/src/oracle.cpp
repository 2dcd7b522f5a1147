#include "seqbound/oracle.hpp"

#include "seqbound/errors.hpp"
#include "seqbound/specfun.hpp"
#include "seqbound/state.hpp"

#include <cmath>
#include <algorithm>
#include <numbers>
#include <span>
#include <random>
#include <sstream>
#include <string>

namespace seqbound {

namespace {

// Uniform grid with trapezoid weights; the kernel is Toeplitz there, so only
// K(d h) for d = 0..n-1 is stored.
class TrapezoidOperator {
public:
    TrapezoidOperator(double xi, int n) : n_(n), x_(n), w_(n), sqrt_w_(n), toeplitz_(n) {
        const double h = 2.0 / (n - 1);
        for (int i = 0; i < n; ++i) {
            x_[i] = -1.0 + h * i;
            w_[i] = (i == 0 || i == n - 1) ? 0.5 * h : h;
            sqrt_w_[i] = std::sqrt(w_[i]);
        }
        const double half = 0.5 * xi;
        for (int d = 0; d < n; ++d) toeplitz_[d] = half * specfun::sinc(std::numbers::pi * half * d * h);
    }

    int size() const noexcept { return n_; }
    std::span<const double> nodes() const noexcept { return x_; }
    double sqrt_weight(int i) const noexcept { return sqrt_w_[i]; }

    // y = W^{1/2} K W^{1/2} v
    template <typename T>
    void apply(const std::vector<T>& v, std::vector<T>& y) const {
        for (int i = 0; i < n_; ++i) {
            T sum{};
            for (int j = 0; j < n_; ++j) sum += toeplitz_[std::abs(i - j)] * sqrt_w_[j] * v[j];
            y[i] = sqrt_w_[i] * sum;
        }
    }

private:
    int n_;
    std::vector<double> x_, w_, sqrt_w_, toeplitz_;
};

void require_xi(double xi, const char* where) {
    if (!(xi >= 0.0) || !std::isfinite(xi))
        throw ArgumentError(std::string(where) + ": xi must be finite and >= 0");
}

} // namespace

PowerIterationResult power_iteration(double xi, int grid_size, double tol, std::uint64_t seed) {
    require_xi(xi, "power_iteration");
    if (grid_size < 128) throw ArgumentError("power_iteration: grid_size must be >= 128");
    if (!(tol >= 1e-12 * (1.0 - 1e-9))) throw ArgumentError("power_iteration: tol must be >= 1e-12");
    if (xi == 0.0) return {0.0, 0, {}};

    const TrapezoidOperator op(xi, grid_size);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> noise(-1e-3, 1e-3);
    std::vector<double> v(grid_size), y(grid_size);
    for (auto& e : v) e = 1.0 + noise(rng);

    auto normalize = [](std::vector<double>& u) {
        double s = 0.0;
        for (double e : u) s += e * e;
        s = std::sqrt(s);
        for (double& e : u) e /= s;
    };
    normalize(v);

    PowerIterationResult r{0.0, 0, {}};
    double previous = 0.0;
    for (int it = 1; it <= kMaxPowerIterations; ++it) {
        op.apply(v, y);
        double q = 0.0;
        for (int i = 0; i < grid_size; ++i) q += v[i] * y[i];
        r.quotients.push_back(q);
        r.iterations = it;
        r.lambda = q;
        if (it > 1 && std::abs(q - previous) < tol) return r;
        previous = q;
        v.swap(y);
        normalize(v);
    }
    std::ostringstream diag;
    diag << "xi=" << xi << " grid=" << grid_size << " last quotient=" << r.lambda;
    throw NumericError("power iteration did not converge within 10^4 iterations", diag.str());
}

double power_iteration_lambda0(double xi, int grid_size, double tol) {
    return power_iteration(xi, grid_size, tol).lambda;
}

double random_state_scan(double xi, int trials, std::uint64_t seed, int grid_size) {
    require_xi(xi, "random_state_scan");
    if (trials < 100) throw ArgumentError("random_state_scan: trials must be >= 100");
    if (grid_size < 128) throw ArgumentError("random_state_scan: grid_size must be >= 128");
    if (xi == 0.0) return 0.0;
    const TrapezoidOperator op(xi, grid_size);

    // The interpolant is linear in the samples, so the quotient reduces to
    // c^H G c / c^H H c with G, H the operator and Gram matrix on the spline basis.
    constexpr std::size_t m = kScanStateSamples;
    std::vector<std::vector<double>> basis(m, std::vector<double>(grid_size));
    for (std::size_t j = 0; j < m; ++j) {
        std::vector<Complex> unit(m, Complex{0.0, 0.0});
        unit[j] = 1.0;
        const StateGrid b(-1.0, 1.0, std::move(unit));
        for (int i = 0; i < grid_size; ++i) basis[j][i] = op.sqrt_weight(i) * b.value_at(op.nodes()[i]).real();
    }
    std::vector<double> g(m * m), h(m * m), applied(grid_size);
    for (std::size_t j = 0; j < m; ++j) {
        op.apply(basis[j], applied);
        for (std::size_t l = 0; l < m; ++l) {
            double gv = 0.0, hv = 0.0;
            for (int i = 0; i < grid_size; ++i) {
                gv += basis[l][i] * applied[i];
                hv += basis[l][i] * basis[j][i];
            }
            g[l * m + j] = gv;
            h[l * m + j] = hv;
        }
    }

    double best = 0.0;
    for (int t = 0; t < trials; ++t) {
        const StateGrid state = random_state(-1.0, 1.0, m, derive_seed(seed, static_cast<std::uint64_t>(t)));
        const auto c = state.samples();
        double num = 0.0, den = 0.0;
        for (std::size_t l = 0; l < m; ++l)
            for (std::size_t j = 0; j < m; ++j) {
                const double re = (std::conj(c[l]) * c[j]).real();
                num += re * g[l * m + j];
                den += re * h[l * m + j];
            }
        best = std::max(best, num / den);
    }
    return best;
}

OracleReport run_oracle(double xi, int grid_size, int trials, std::uint64_t seed, double tol) {
    const PowerIterationResult pi = power_iteration(xi, grid_size, tol, seed);
    return {xi, pi.lambda, pi.iterations, random_state_scan(xi, trials, seed, grid_size), trials, seed};
}

} // namespace seqbound
