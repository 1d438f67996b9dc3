#pragma once

#include "nf/schemes.hpp"

#include <span>
#include <vector>

namespace nf {

struct StepStats {
    std::size_t steps_accepted = 0;
    std::size_t steps_rejected = 0;
    std::size_t rhs_evals = 0;
};

/// States recorded at checkpoint times. checkpoints[0] is always t0 and
/// states[0] the system's initial state.
struct Trajectory {
    std::vector<double> checkpoints;
    std::vector<std::vector<double>> states;
    StepStats stats;
};

/// Fixed-step forward Euler, U_{k+1} = U_k + h_t rhs(t_k, U_k), t_k = t0 + k h_t.
/// Every checkpoint must sit on the step lattice (within 1e-9 relative); a
/// checkpoint off the lattice is rejected with std::invalid_argument.
Trajectory euler_integrate(const SemiDiscreteSystem& sys, double t0, double horizon, double h_t,
                           std::span<const double> checkpoints);

struct Rk54Options {
    double rtol = 1e-6;
    double atol = 1e-9;
    /// Forces the first step size; 0 selects it automatically.
    double initial_step = 0.0;
    /// Disables step-size adaptation (every step is accepted at initial_step).
    bool fixed_step = false;
};

/// Adaptive Dormand-Prince 5(4) pair, no FSAL reuse: every attempted step
/// costs 7 rhs evaluations, plus one evaluation for the initial step guess.
/// Steps are clipped to land on each checkpoint. Throws NumericalError on
/// step-size underflow (h < 1e-14 T) or a non-finite right-hand side.
Trajectory rk54_integrate(const SemiDiscreteSystem& sys, double t0, double horizon,
                          const Rk54Options& opts, std::span<const double> checkpoints);

/// Single Dormand-Prince step from (t, y) with step h. Returns the 5th-order
/// solution and the embedded error estimate (5th minus 4th order).
struct Rk54Step {
    std::vector<double> y;
    std::vector<double> error;
};
Rk54Step rk54_step(const SemiDiscreteSystem& sys, double t, std::span<const double> y, double h);

/// count equispaced checkpoints on [t0, t0 + horizon], both ends included.
std::vector<double> equispaced_checkpoints(double t0, double horizon, std::size_t count);

} // namespace nf
