#include "seqbound/quadrature.hpp"

#include "seqbound/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

namespace seqbound {

QuadratureRule::QuadratureRule(std::vector<double> nodes, std::vector<double> weights)
    : nodes_(std::move(nodes)), weights_(std::move(weights)) {
    if (nodes_.empty() || nodes_.size() != weights_.size())
        throw ArgumentError("QuadratureRule: nodes and weights must be non-empty and of equal length");
}

namespace {

// P_n(x) and P_n'(x) by the three-term recurrence.
std::pair<double, double> legendre_with_derivative(int n, double x) {
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    const double dp = n * (x * p1 - p0) / (x * x - 1.0);
    return {p1, dp};
}

} // namespace

QuadratureRule gauss_legendre(int order) {
    if (order < 1 || order > kMaxQuadratureOrder)
        throw ArgumentError("gauss_legendre: order must be in [1, " +
                            std::to_string(kMaxQuadratureOrder) + "], got " + std::to_string(order));
    if (order == 1) return QuadratureRule({0.0}, {2.0});

    std::vector<double> nodes(order), weights(order);
    const int half = (order + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // i-th largest root, Chebyshev-like initial guess
        double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            auto [p, d] = legendre_with_derivative(order, x);
            dp = d;
            const double dx = p / d;
            x -= dx;
            if (std::abs(dx) <= 1e-15) break;
        }
        dp = legendre_with_derivative(order, x).second;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[order - 1 - i] = x;
        nodes[i] = -x;
        weights[order - 1 - i] = w;
        weights[i] = w;
    }
    if (order % 2 == 1) nodes[order / 2] = 0.0;
    return QuadratureRule(std::move(nodes), std::move(weights));
}

PanelNodes composite_rule(std::span<const double> breaks, int points_per_panel) {
    if (breaks.size() < 2) throw ArgumentError("composite_rule: need at least two breakpoints");
    const QuadratureRule base = gauss_legendre(points_per_panel);
    PanelNodes out;
    out.points.reserve((breaks.size() - 1) * base.order());
    out.weights.reserve(out.points.capacity());
    for (std::size_t j = 0; j + 1 < breaks.size(); ++j) {
        const double half = 0.5 * (breaks[j + 1] - breaks[j]);
        const double mid = 0.5 * (breaks[j + 1] + breaks[j]);
        for (std::size_t i = 0; i < base.order(); ++i) {
            out.points.push_back(mid + half * base.nodes()[i]);
            out.weights.push_back(half * base.weights()[i]);
        }
    }
    return out;
}

PanelNodes composite_rule(double a, double b, int panels, int points_per_panel) {
    if (panels < 1) throw ArgumentError("composite_rule: panels must be positive");
    if (!(b > a)) throw ArgumentError("composite_rule: empty interval");
    std::vector<double> breaks(panels + 1);
    for (int j = 0; j <= panels; ++j) breaks[j] = a + (b - a) * j / panels;
    breaks[panels] = b;
    return composite_rule(breaks, points_per_panel);
}

} // namespace seqbound
