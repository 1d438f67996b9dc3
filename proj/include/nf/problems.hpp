#pragma once

#include "nf/model.hpp"
#include "nf/quadrature.hpp"

#include <functional>
#include <string>
#include <string_view>

namespace nf {

enum class ProblemId { P1, P2, P3, P4, P5, P6, P7p, P8p, P9p, P10p };

std::string to_string(ProblemId id);
/// Case-insensitive parse of "P1".."P6", "P7p".."P10p".
ProblemId parse_problem_id(std::string_view token);
bool is_periodic(ProblemId id);
const std::vector<ProblemId>& all_problems();

struct ProblemParams {
    double D = 0.8;
    double gamma = 0.5;
    double k = 5.0;
    double theta = 0.3;
};

/// Manufactured-solution neural field problem
///   u_t = -u + int w(x, y) f(u(y, t)) dy + xi(x, t).
struct TestProblem {
    std::string name;
    Interval interval;
    Kernel kernel;
    FiringRate firing{5.0, 0.3};
    std::function<double(double, double)> forcing;
    std::function<double(double)> initial;
    /// Closed-form solution and its time derivative; empty for ad-hoc problems.
    std::function<double(double, double)> exact;
    std::function<double(double, double)> exact_dt;
    ProblemParams params;
    double zeta0 = 0.0;
    double t0 = 0.0;

    bool periodic() const { return interval.periodic; }
    bool has_exact() const { return static_cast<bool>(exact); }
};

/// The ten benchmark problems. Non-periodic ones live on [-1, 1] with
/// w(x, y) = exp(-x^2 + y^2) zeta(y); periodic ones on [0, 2 pi) with
/// w(x, y) = exp(-cos^2 x + cos^2 y) zeta(y). The exact solution is
/// u(x, t) = f^{-1}(D exp(-gamma t - q(x))) with q = x^2 or cos^2 x.
TestProblem make_problem(ProblemId id);

/// Same solution as make_problem(base) with the kernel removed and the
/// forcing reduced to xi = u_t + u.
TestProblem make_zero_kernel_problem(ProblemId base);

/// zeta and its integral over one domain length (the reference value).
std::function<double(double)> zeta_function(ProblemId id);
double zeta_integral(ProblemId id);

double exact_time_derivative(const TestProblem& problem, double x, double t);

/// u_t + u - int w(x, y) f(u(y, t)) dy - xi at (x, t), with the integral
/// evaluated by ref_quad.
double continuum_residual(const TestProblem& problem, double x, double t,
                          const QuadratureRule& ref_quad);

/// High-resolution rule on the problem's domain used for reference integrals.
QuadratureRule reference_rule(const TestProblem& problem, std::size_t resolution_factor = 1);

} // namespace nf
