#include "nf/timestep.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace nf {

namespace {

std::vector<double> normalise_checkpoints(double t0, double horizon,
                                          std::span<const double> checkpoints) {
    std::vector<double> out{t0};
    const double tol = 1e-12 * std::max(1.0, std::abs(horizon));
    for (double c : checkpoints) {
        if (c < t0 - tol || c > t0 + horizon + tol) {
            std::ostringstream msg;
            msg << "checkpoint " << c << " outside [" << t0 << ", " << t0 + horizon << "]";
            throw std::invalid_argument(msg.str());
        }
        if (c > out.back() + tol) {
            out.push_back(std::min(c, t0 + horizon));
        } else if (std::abs(c - out.back()) > tol) {
            throw std::invalid_argument("checkpoints must be strictly increasing");
        }
    }
    return out;
}

bool all_finite(std::span<const double> v) {
    return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
}

// Dormand-Prince 5(4) tableau.
constexpr std::array<double, 7> kC{0.0, 1.0 / 5.0, 3.0 / 10.0, 4.0 / 5.0, 8.0 / 9.0, 1.0, 1.0};
constexpr double kA[7][6] = {
    {},
    {1.0 / 5.0},
    {3.0 / 40.0, 9.0 / 40.0},
    {44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0},
    {19372.0 / 6561.0, -25360.0 / 2187.0, 64448.0 / 6561.0, -212.0 / 729.0},
    {9017.0 / 3168.0, -355.0 / 33.0, 46732.0 / 5247.0, 49.0 / 176.0, -5103.0 / 18656.0},
    {35.0 / 384.0, 0.0, 500.0 / 1113.0, 125.0 / 192.0, -2187.0 / 6784.0, 11.0 / 84.0},
};
constexpr std::array<double, 7> kB5{35.0 / 384.0,     0.0, 500.0 / 1113.0, 125.0 / 192.0,
                                    -2187.0 / 6784.0, 11.0 / 84.0, 0.0};
// b5 - b4
constexpr std::array<double, 7> kE{71.0 / 57600.0,      0.0, -71.0 / 16695.0, 71.0 / 1920.0,
                                   -17253.0 / 339200.0, 22.0 / 525.0, -1.0 / 40.0};

} // namespace

std::vector<double> equispaced_checkpoints(double t0, double horizon, std::size_t count) {
    if (count < 2) {
        throw std::invalid_argument("need at least two checkpoints");
    }
    std::vector<double> out(count);
    for (std::size_t k = 0; k < count; ++k) {
        out[k] = t0 + horizon * static_cast<double>(k) / static_cast<double>(count - 1);
    }
    out.back() = t0 + horizon;
    return out;
}

Trajectory euler_integrate(const SemiDiscreteSystem& sys, double t0, double horizon, double h_t,
                           std::span<const double> checkpoints) {
    if (!(h_t > 0.0)) {
        throw std::invalid_argument("euler_integrate: step must be positive");
    }
    const std::vector<double> cps = normalise_checkpoints(t0, horizon, checkpoints);
    std::vector<std::size_t> step_index(cps.size());
    for (std::size_t c = 0; c < cps.size(); ++c) {
        const double steps = (cps[c] - t0) / h_t;
        const double k = std::round(steps);
        if (std::abs(k - steps) > 1e-9 * std::max(1.0, steps)) {
            std::ostringstream msg;
            msg.precision(17);
            msg << "checkpoint t = " << cps[c] << " is not on the Euler lattice t0 + k*h_t (t0 = "
                << t0 << ", h_t = " << h_t << ", (t - t0)/h_t = " << steps << ")";
            throw std::invalid_argument(msg.str());
        }
        step_index[c] = static_cast<std::size_t>(k);
    }

    Trajectory traj;
    traj.checkpoints = cps;
    std::vector<double> u = sys.initial;
    std::vector<double> du(sys.dim);
    traj.states.push_back(u);
    std::size_t next = 1;
    for (std::size_t k = 0; next < cps.size(); ++k) {
        const double t = t0 + static_cast<double>(k) * h_t;
        sys.rhs(t, u, du);
        ++traj.stats.rhs_evals;
        if (!all_finite(du)) {
            throw NumericalError("euler_integrate: non-finite right-hand side at t = " +
                                 std::to_string(t));
        }
        for (std::size_t i = 0; i < u.size(); ++i) u[i] += h_t * du[i];
        ++traj.stats.steps_accepted;
        while (next < cps.size() && step_index[next] == k + 1) {
            traj.states.push_back(u);
            ++next;
        }
    }
    return traj;
}

Rk54Step rk54_step(const SemiDiscreteSystem& sys, double t, std::span<const double> y, double h) {
    const std::size_t dim = y.size();
    std::array<std::vector<double>, 7> k;
    std::vector<double> stage(dim);
    for (std::size_t s = 0; s < 7; ++s) {
        k[s].resize(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            double acc = 0.0;
            for (std::size_t r = 0; r < s; ++r) acc += kA[s][r] * k[r][i];
            stage[i] = y[i] + h * acc;
        }
        sys.rhs(t + kC[s] * h, stage, k[s]);
    }
    // Stage 7 is evaluated at the 5th-order solution, so stage == y5 here.
    Rk54Step out;
    out.y = stage;
    out.error.resize(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        double acc = 0.0;
        for (std::size_t s = 0; s < 7; ++s) acc += kE[s] * k[s][i];
        out.error[i] = h * acc;
    }
    return out;
}

Trajectory rk54_integrate(const SemiDiscreteSystem& sys, double t0, double horizon,
                          const Rk54Options& opts, std::span<const double> checkpoints) {
    if (!(opts.rtol > 0.0 && opts.atol > 0.0)) {
        throw std::invalid_argument("rk54_integrate: rtol and atol must be positive");
    }
    if (!(horizon > 0.0)) {
        throw std::invalid_argument("rk54_integrate: horizon must be positive");
    }
    const std::vector<double> cps = normalise_checkpoints(t0, horizon, checkpoints);

    Trajectory traj;
    traj.checkpoints = cps;
    std::vector<double> y = sys.initial;
    traj.states.push_back(y);

    double h = opts.initial_step;
    if (!(h > 0.0)) {
        std::vector<double> f0(sys.dim);
        sys.rhs(t0, y, f0);
        ++traj.stats.rhs_evals;
        double fmax = 0.0;
        for (double v : f0) fmax = std::max(fmax, std::abs(v));
        if (!std::isfinite(fmax)) {
            throw NumericalError("rk54_integrate: non-finite right-hand side at t0");
        }
        h = std::min(horizon / 100.0, 0.1 * std::pow(opts.atol / std::max(fmax, 1e-12), 0.2));
    }
    const double h_min = 1e-14 * horizon;

    double t = t0;
    for (std::size_t c = 1; c < cps.size(); ++c) {
        const double target = cps[c];
        while (t < target) {
            const bool land = h >= target - t;
            const double h_try = land ? target - t : h;
            Rk54Step step = rk54_step(sys, t, y, h_try);
            traj.stats.rhs_evals += 7;
            if (!all_finite(step.y) || !all_finite(step.error)) {
                throw NumericalError("rk54_integrate: non-finite right-hand side near t = " +
                                     std::to_string(t));
            }
            double err = 0.0;
            for (std::size_t i = 0; i < y.size(); ++i) {
                const double scale = opts.atol + opts.rtol * std::max(std::abs(y[i]), std::abs(step.y[i]));
                err = std::max(err, std::abs(step.error[i]) / scale);
            }
            if (opts.fixed_step || err <= 1.0) {
                ++traj.stats.steps_accepted;
                t = land ? target : t + h_try;
                y = std::move(step.y);
                if (!opts.fixed_step) {
                    const double factor =
                        err == 0.0 ? 5.0 : std::min(5.0, std::max(0.2, 0.9 * std::pow(err, -0.2)));
                    const double proposal = h_try * factor;
                    // A step shortened to hit a checkpoint says nothing against the longer one.
                    h = land ? std::max(h, proposal) : proposal;
                }
            } else {
                ++traj.stats.steps_rejected;
                h = h_try * std::max(0.2, 0.9 * std::pow(err, -0.2));
                if (h < h_min) {
                    std::ostringstream msg;
                    msg << "rk54_integrate: step size underflow at t = " << t << " (h = " << h
                        << ", error norm = " << err << ")";
                    throw NumericalError(msg.str());
                }
            }
        }
        traj.states.push_back(y);
    }
    return traj;
}

} // namespace nf
