#pragma once

#include "nf/problems.hpp"
#include "nf/schemes.hpp"
#include "nf/timestep.hpp"

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace nf {

/// I/O failure with the offending path in the message.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct StepperConfig {
    enum class Kind { rk54, euler };
    Kind kind = Kind::rk54;
    double rtol = 1e-6;
    double atol = 1e-9;
    double h_t = 1e-3;

    static StepperConfig rk54(double rtol, double atol) { return {Kind::rk54, rtol, atol, 0.0}; }
    static StepperConfig euler(double h_t) { return {Kind::euler, 0.0, 0.0, h_t}; }
};

struct StudyConfig {
    std::vector<ProblemId> problems;
    SchemeSpec scheme;
    std::vector<std::size_t> n_values;
    double t0 = 0.0;
    double horizon = 1.0;
    StepperConfig stepper;
    std::size_t eval_points = 2048;
    std::size_t checkpoint_count = 51;
    /// Re-run the finest n at rtol/100 to locate the temporal error floor (rk54 only).
    bool estimate_floor = true;

    /// Throws std::invalid_argument on a malformed configuration.
    void validate() const;
};

struct ConvergenceRecord {
    std::string problem;
    std::string scheme;
    std::string variant;
    std::size_t n = 0;
    double h_x = 0.0;
    double error = 0.0;
    std::optional<double> observed_order;
    double beta_n = 0.0;
    double wall_time_s = 0.0;
};

struct StudyResult {
    std::vector<ConvergenceRecord> records;
    /// Estimated temporal floor per problem, in config order (0 when not estimated).
    std::vector<double> floors;
};

/// Evaluation grid: eval_points equispaced points, endpoints included unless periodic.
std::vector<double> eval_grid(const Interval& interval, std::size_t eval_points);

/// Sup-norm or trapezium L^2 norm of samples on eval_grid(interval, values.size()).
double spatial_norm(std::span<const double> values, const Interval& interval, NormKind norm);

/// max over checkpoints of || reconstruct(a(t_k)) - u(., t_k) || in the scheme's norm.
double error_CJX(const SemiDiscreteSystem& sys, const Trajectory& traj, const TestProblem& problem,
                 std::size_t eval_points);

/// max over checkpoints of || u(., t_k) - P_n u(., t_k) || in the scheme's norm.
double projector_error(const SemiDiscreteSystem& sys, const TestProblem& problem,
                       std::span<const double> checkpoints, std::size_t eval_points);

/// C(J, X) distance between two trajectories of the same system.
double trajectory_distance(const SemiDiscreteSystem& sys, const Trajectory& a, const Trajectory& b,
                           std::size_t eval_points);

Trajectory integrate(const SemiDiscreteSystem& sys, double t0, double horizon,
                     const StepperConfig& stepper, std::span<const double> checkpoints);

/// log(e1 / e2) / log(n2 / n1); absent when either error is not positive.
std::optional<double> observed_order(double e1, double e2, double n1, double n2);

/// Least-squares slope of -log(error) against log(n).
double fitted_order(std::span<const double> n, std::span<const double> errors);

StudyResult run_study(const StudyConfig& cfg);

struct SandwichResult {
    double scheme_error = 0.0;
    double projector_error = 0.0;
    double temporal_floor = 0.0;
    double beta_n = 0.0;
    double ratio = 0.0;
    double lower = 0.0;
    double upper = 0.0;
    bool pass = false;
    /// Projector error below 10x the temporal floor; neither pass nor fail.
    bool inconclusive = false;
};

/// Compare ||u - u_n|| / ||u - P_n u|| with [1/(1+beta_n), e^{beta_n}], widened by 10%.
SandwichResult sandwich_check(const TestProblem& problem, const SchemeSpec& scheme, std::size_t n,
                              const StepperConfig& stepper, double t0 = 0.0, double horizon = 1.0,
                              std::size_t eval_points = 2048, std::size_t checkpoint_count = 51);

struct EulerSplitConfig {
    ProblemId problem = ProblemId::P1;
    SchemeSpec scheme;
    std::size_t n_fixed = 512;
    std::vector<double> h_values{0.02, 0.01, 0.005, 0.0025};
    std::vector<std::size_t> spatial_n{8, 16, 32, 64};
    double spatial_h_t = 1e-4;
    double t0 = 0.0;
    double horizon = 1.0;
    std::size_t eval_points = 2048;
    std::size_t checkpoint_count = 51;
};

struct EulerSplitPoint {
    std::size_t n = 0;
    double h_t = 0.0;
    double error = 0.0;
    double wall_time_s = 0.0;
};

struct EulerSplitResult {
    /// Euler at n_fixed against a tight rk54 reference at the same n.
    std::vector<EulerSplitPoint> temporal;
    double temporal_order = 0.0;
    /// Spatial floor at n_fixed: rk54 reference against the exact solution.
    double spatial_floor = 0.0;
    /// Euler at spatial_h_t against the exact solution for each n in spatial_n.
    std::vector<EulerSplitPoint> spatial;
    double spatial_order = 0.0;
    /// Least-squares fit error ~ a h_t + b h_x^2 over h_values x spatial_n.
    std::vector<EulerSplitPoint> grid;
    double fit_a = 0.0;
    double fit_b = 0.0;
    double fit_max_rel_residual = 0.0;
    double beta_n = 0.0;
};

EulerSplitResult euler_split_study(const EulerSplitConfig& cfg);

/// Flatten the Euler study into CSV records (variant column carries h_t).
std::vector<ConvergenceRecord> euler_records(const EulerSplitConfig& cfg,
                                             const EulerSplitResult& result);

inline constexpr const char* kCsvHeader =
    "problem,scheme,variant,n,h_x,error,observed_order,beta_n,wall_time_s";

void write_csv(const std::vector<ConvergenceRecord>& records, std::ostream& out);
void emit_csv(const std::vector<ConvergenceRecord>& records, const std::string& path);
std::vector<ConvergenceRecord> read_csv(std::istream& in);

/// Renders a double with 17 significant digits.
std::string format_double(double v);

// Property suites behind `nf check`.
struct CheckOutcome {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// suite: "quadrature", "projection", "timestep", "residual", "sandwich", or
/// "units" (quadrature + projection + timestep). Unknown names throw.
std::vector<CheckOutcome> run_check_suite(const std::string& suite);

} // namespace nf
