#include "nf/model.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace nf {

Interval::Interval(double left, double right, bool is_periodic)
    : a(left), b(right), periodic(is_periodic) {
    if (!(left < right)) {
        throw std::invalid_argument("Interval requires a < b, got [" + std::to_string(left) +
                                    ", " + std::to_string(right) + "]");
    }
}

UniformGrid::UniformGrid(Interval interval, std::size_t n) : interval_(interval), n_(n) {
    if (n == 0) {
        throw std::invalid_argument("UniformGrid needs at least one element");
    }
    h_ = interval.length() / static_cast<double>(n);
    const std::size_t count = interval.periodic ? n : n + 1;
    nodes_.resize(count);
    for (std::size_t i = 0; i < count; ++i) {
        nodes_[i] = std::fma(static_cast<double>(i), h_, interval.a);
    }
    if (!interval.periodic) {
        nodes_.back() = interval.b;
    }
}

ChebyshevGrid::ChebyshevGrid(std::size_t n) : n_(n) {
    if (n == 0) {
        throw std::invalid_argument("ChebyshevGrid needs degree >= 1");
    }
    nodes_.resize(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        nodes_[i] = std::cos(static_cast<double>(i) * std::numbers::pi / static_cast<double>(n));
    }
    // Exact symmetry: cos(i pi / n) = -cos((n - i) pi / n).
    for (std::size_t i = 0; i <= n / 2; ++i) {
        const double v = 0.5 * (nodes_[i] - nodes_[n - i]);
        nodes_[i] = v;
        nodes_[n - i] = -v;
    }
    if (n % 2 == 0) {
        nodes_[n / 2] = 0.0;
    }
}

FiringRate::FiringRate(double gain, double threshold) : k_(gain), theta_(threshold) {
    if (!(gain > 0.0)) {
        throw std::invalid_argument("FiringRate gain must be positive");
    }
}

double FiringRate::eval(double u) const {
    const double z = k_ * (u - theta_);
    if (z > 0.0) {
        const double s = std::exp(-z);
        return s / (1.0 + s);
    }
    return 1.0 / (1.0 + std::exp(z));
}

double FiringRate::derivative(double u) const {
    // f' = -k f (1 - f) = -k s / (1 + s)^2 with s = exp(-|z|).
    const double s = std::exp(-std::abs(k_ * (u - theta_)));
    const double d = 1.0 + s;
    return -k_ * s / (d * d);
}

double FiringRate::inverse(double r) const {
    if (!(r > 0.0 && r < 1.0)) {
        throw std::domain_error("firing rate inverse needs 0 < r < 1, got " + std::to_string(r));
    }
    return theta_ + std::log((1.0 - r) / r) / k_;
}

double firing_eval(const FiringRate& fr, double u) { return fr.eval(u); }
double firing_inverse(const FiringRate& fr, double r) { return fr.inverse(r); }
double firing_derivative(const FiringRate& fr, double u) { return fr.derivative(u); }

Kernel Kernel::zero() {
    Kernel k;
    k.eval = [](double, double) { return 0.0; };
    k.separable = Separable{[](double) { return 0.0; }, [](double) { return 0.0; }};
    return k;
}

double kernel_eval(const Kernel& kernel, double x, double y) { return kernel.eval(x, y); }

} // namespace nf
