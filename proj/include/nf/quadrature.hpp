#pragma once

#include "nf/model.hpp"

#include <functional>
#include <vector>

namespace nf {

/// Fixed node/weight rule on an interval.
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
    Interval interval;

    std::size_t size() const { return nodes.size(); }
    double weight_sum() const;

    template <class F>
    double operator()(F&& integrand) const {
        double acc = 0.0;
        for (std::size_t j = 0; j < nodes.size(); ++j) {
            acc += weights[j] * integrand(nodes[j]);
        }
        return acc;
    }
};

/// Composite trapezium rule with n elements. On a periodic interval the rule
/// has n nodes with uniform weight h.
QuadratureRule trapezium_rule(const Interval& interval, std::size_t n);

/// Clenshaw-Curtis rule on [-1, 1] at the n+1 Chebyshev points cos(i pi / n).
/// Weights come from a type-I discrete cosine transform of the even Chebyshev
/// moments 2 / (1 - m^2). Exact for polynomials of degree <= n.
QuadratureRule clenshaw_curtis(std::size_t n);

/// Two-point Gauss-Legendre rule on the reference element [-1, 1].
QuadratureRule gauss_legendre_2();

double apply(const QuadratureRule& rule, const std::function<double(double)>& integrand);

} // namespace nf
