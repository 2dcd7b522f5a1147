#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace seqbound {

/// Gauss-Legendre nodes and weights on [-1, 1].
///
/// Nodes are strictly increasing and exactly mirror-symmetric
/// (nodes[i] == -nodes[order-1-i]); all weights are positive.
class QuadratureRule {
public:
    QuadratureRule(std::vector<double> nodes, std::vector<double> weights);

    std::size_t order() const noexcept { return nodes_.size(); }
    std::span<const double> nodes() const noexcept { return nodes_; }
    std::span<const double> weights() const noexcept { return weights_; }

    // Integral over [-1, 1] of f.
    template <typename F>
    auto integrate(F&& f) const {
        decltype(f(0.0)) sum{};
        for (std::size_t i = 0; i < nodes_.size(); ++i)
            sum += weights_[i] * f(nodes_[i]);
        return sum;
    }

private:
    std::vector<double> nodes_;
    std::vector<double> weights_;
};

constexpr int kMaxQuadratureOrder = 4096;

// Throws ArgumentError unless 1 <= order <= kMaxQuadratureOrder.
QuadratureRule gauss_legendre(int order);


/// Nodes and weights for a composite rule on an arbitrary interval.
struct PanelNodes {
    std::vector<double> points;
    std::vector<double> weights;
};

// Composite Gauss-Legendre: each consecutive pair of `breaks` gets a
// `points_per_panel`-point rule mapped onto it.
PanelNodes composite_rule(std::span<const double> breaks, int points_per_panel);

// `panels` equal panels on [a, b].
PanelNodes composite_rule(double a, double b, int panels, int points_per_panel);

} // namespace seqbound
