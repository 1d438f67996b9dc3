#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace nf {

/// Raised when an integration or assembly cannot produce a finite answer.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Spatial domain in one dimension. A periodic interval identifies a and b.
struct Interval {
    double a = -1.0;
    double b = 1.0;
    bool periodic = false;

    Interval() = default;
    Interval(double left, double right, bool is_periodic = false);

    double length() const { return b - a; }
    bool contains(double x) const { return x >= a && x <= b; }
};

/// n elements of width h. Non-periodic grids carry n+1 nodes with the last
/// node equal to b; periodic grids carry n nodes (b is identified with a).
class UniformGrid {
public:
    UniformGrid(Interval interval, std::size_t n);

    const Interval& interval() const { return interval_; }
    std::size_t elements() const { return n_; }
    double spacing() const { return h_; }
    const std::vector<double>& nodes() const { return nodes_; }
    std::size_t size() const { return nodes_.size(); }
    double operator[](std::size_t i) const { return nodes_[i]; }

private:
    Interval interval_;
    std::size_t n_;
    double h_;
    std::vector<double> nodes_;
};

/// Chebyshev points of the second kind, x_i = cos(i pi / n), ordered from 1 down to -1.
class ChebyshevGrid {
public:
    explicit ChebyshevGrid(std::size_t n);

    std::size_t degree() const { return n_; }
    const std::vector<double>& nodes() const { return nodes_; }
    std::size_t size() const { return nodes_.size(); }
    double operator[](std::size_t i) const { return nodes_[i]; }

private:
    std::size_t n_;
    std::vector<double> nodes_;
};

/// Logistic firing rate f(u) = 1 / (1 + exp(k (u - theta))).
///
/// With the exponent taken as written, f is decreasing in u. inverse() is the
/// exact inverse of eval(), so eval(inverse(r)) == r.
class FiringRate {
public:
    FiringRate(double gain, double threshold);

    double gain() const { return k_; }
    double threshold() const { return theta_; }

    double eval(double u) const;
    double derivative(double u) const;
    /// Throws std::domain_error unless 0 < r < 1.
    double inverse(double r) const;

    double sup_norm() const { return 1.0; }
    double derivative_sup_norm() const { return 0.25 * k_; }

private:
    double k_;
    double theta_;
};

double firing_eval(const FiringRate& fr, double u);
double firing_inverse(const FiringRate& fr, double r);
double firing_derivative(const FiringRate& fr, double u);

/// Synaptic kernel w(x, y). A separable kernel also exposes the factors
/// with w(x, y) = x_factor(x) * y_factor(y).
struct Kernel {
    struct Separable {
        std::function<double(double)> x_factor;
        std::function<double(double)> y_factor;
    };

    std::function<double(double, double)> eval;
    std::optional<Separable> separable;

    double operator()(double x, double y) const { return eval(x, y); }

    static Kernel zero();
};

double kernel_eval(const Kernel& kernel, double x, double y);

} // namespace nf
