#include "nf/quadrature.hpp"

#include "nf/projection.hpp"

#include <cmath>
#include <numeric>

namespace nf {

double QuadratureRule::weight_sum() const {
    return std::accumulate(weights.begin(), weights.end(), 0.0);
}

QuadratureRule trapezium_rule(const Interval& interval, std::size_t n) {
    if (n == 0) {
        throw std::invalid_argument("trapezium rule needs n >= 1");
    }
    const UniformGrid grid(interval, n);
    QuadratureRule rule;
    rule.interval = interval;
    rule.nodes = grid.nodes();
    rule.weights.assign(grid.size(), grid.spacing());
    if (!interval.periodic) {
        rule.weights.front() *= 0.5;
        rule.weights.back() *= 0.5;
    }
    return rule;
}

QuadratureRule clenshaw_curtis(std::size_t n) {
    if (n < 2) {
        throw std::invalid_argument("Clenshaw-Curtis rule needs n >= 2");
    }
    std::vector<double> moments(n + 1, 0.0);
    for (std::size_t m = 0; m <= n; m += 2) {
        const double md = static_cast<double>(m);
        moments[m] = 2.0 / (1.0 - md * md);
    }
    // Y_j = mu_0 + (-1)^j mu_n + 2 sum_{m=1}^{n-1} mu_m cos(pi m j / n)
    const std::vector<double> y = dct1(moments);

    QuadratureRule rule;
    rule.interval = Interval(-1.0, 1.0);
    rule.nodes = ChebyshevGrid(n).nodes();
    rule.weights.resize(n + 1);
    const double scale = 1.0 / static_cast<double>(n);
    for (std::size_t j = 0; j <= n; ++j) {
        rule.weights[j] = y[j] * scale;
    }
    rule.weights.front() *= 0.5;
    rule.weights.back() *= 0.5;
    return rule;
}

QuadratureRule gauss_legendre_2() {
    const double z = 1.0 / std::sqrt(3.0);
    QuadratureRule rule;
    rule.interval = Interval(-1.0, 1.0);
    rule.nodes = {-z, z};
    rule.weights = {1.0, 1.0};
    return rule;
}

double apply(const QuadratureRule& rule, const std::function<double(double)>& integrand) {
    return rule(integrand);
}

} // namespace nf
