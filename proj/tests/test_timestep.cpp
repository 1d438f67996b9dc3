#include "nf/problems.hpp"
#include "nf/timestep.hpp"

#include <doctest.h>

#include <cmath>
#include <vector>

namespace {

nf::SemiDiscreteSystem decay() {
    return nf::make_ode_system({1.0}, [](double, std::span<const double> a, std::span<double> out) {
        out[0] = -a[0];
    });
}

} // namespace

TEST_CASE("checkpoints") {
    const auto cps = nf::equispaced_checkpoints(0.5, 1.0, 5);
    REQUIRE(cps.size() == 5);
    CHECK(cps.front() == 0.5);
    CHECK(cps.back() == 1.5);
    CHECK(cps[2] == doctest::Approx(1.0));
}

TEST_CASE("euler: one step of u' = -u") {
    const std::vector<double> cps{0.0, 0.1};
    const auto traj = nf::euler_integrate(decay(), 0.0, 0.1, 0.1, cps);
    REQUIRE(traj.states.size() == 2);
    CHECK(traj.states[0][0] == 1.0);
    CHECK(traj.states[1][0] == doctest::Approx(0.9).epsilon(1e-15));
    CHECK(traj.stats.rhs_evals == 1);
}

TEST_CASE("euler: checkpoints off the lattice are rejected") {
    const std::vector<double> cps{0.0, 0.15};
    CHECK_THROWS_AS(nf::euler_integrate(decay(), 0.0, 1.0, 0.1, cps), std::invalid_argument);
}

TEST_CASE("euler matches (1 - h)^k exactly") {
    const auto cps = nf::equispaced_checkpoints(0.0, 1.0, 11);
    const auto traj = nf::euler_integrate(decay(), 0.0, 1.0, 0.01, cps);
    for (std::size_t k = 0; k < cps.size(); ++k) {
        CHECK(traj.states[k][0] == doctest::Approx(std::pow(0.99, 10.0 * k)).epsilon(1e-13));
    }
}

TEST_CASE("euler is first order") {
    auto err = [](double h) {
        const std::vector<double> cps{0.0, 1.0};
        return std::abs(nf::euler_integrate(decay(), 0.0, 1.0, h, cps).states[1][0] - std::exp(-1.0));
    };
    const double order = std::log2(err(0.01) / err(0.005));
    CHECK(order > 0.95);
    CHECK(order < 1.05);
}

TEST_CASE("rk54: scalar decay within tolerance") {
    const auto cps = nf::equispaced_checkpoints(0.0, 1.0, 11);
    nf::Rk54Options opts;
    opts.rtol = 1e-8;
    opts.atol = 1e-10;
    const auto traj = nf::rk54_integrate(decay(), 0.0, 1.0, opts, cps);
    for (std::size_t k = 0; k < cps.size(); ++k) {
        CHECK(std::abs(traj.states[k][0] - std::exp(-cps[k])) < 50.0 * opts.rtol);
    }
    CHECK(traj.stats.rhs_evals == 7 * (traj.stats.steps_accepted + traj.stats.steps_rejected) + 1);
    CHECK(traj.stats.steps_accepted >= cps.size() - 1);
}

TEST_CASE("rk54: one fixed step matches the fifth-order Taylor polynomial") {
    const double h = 0.1;
    const auto step = nf::rk54_step(decay(), 0.0, std::vector<double>{1.0}, h);
    // For u' = -u the 5th-order DP weights reproduce sum_{k<=5} (-h)^k / k! plus an h^6 term.
    double taylor = 0.0, term = 1.0;
    for (int k = 0; k <= 5; ++k) {
        taylor += term;
        term *= -h / (k + 1);
    }
    CHECK(std::abs(step.y[0] - taylor) < 1e-8);
    CHECK(std::abs(step.y[0] - std::exp(-h)) < 1e-8);
    CHECK(std::abs(step.error[0]) < 1e-6);
    CHECK(std::abs(step.error[0]) > 0.0);
}

TEST_CASE("rk54: constant solution takes one step per checkpoint gap") {
    const auto still = nf::make_ode_system({2.5, -1.0}, [](double, std::span<const double>, std::span<double> out) {
        out[0] = 0.0;
        out[1] = 0.0;
    });
    const auto cps = nf::equispaced_checkpoints(0.0, 1.0, 6);
    nf::Rk54Options opts;
    opts.initial_step = 1.0;
    const auto traj = nf::rk54_integrate(still, 0.0, 1.0, opts, cps);
    CHECK(traj.stats.steps_accepted == 5);
    CHECK(traj.stats.steps_rejected == 0);
    for (const auto& s : traj.states) {
        CHECK(s[0] == 2.5);
        CHECK(s[1] == -1.0);
    }
}

TEST_CASE("rk54: non-finite right-hand side raises") {
    const auto blow = nf::make_ode_system({1.0}, [](double, std::span<const double>, std::span<double> out) {
        out[0] = std::nan("");
    });
    const auto cps = nf::equispaced_checkpoints(0.0, 1.0, 3);
    CHECK_THROWS_AS(nf::rk54_integrate(blow, 0.0, 1.0, {}, cps), nf::NumericalError);
}

TEST_CASE("rk54: stiff growth underflows the step size") {
    const auto blow = nf::make_ode_system({1.0}, [](double, std::span<const double> a, std::span<double> out) {
        out[0] = a[0] * a[0];
    });
    const std::vector<double> cps{0.0, 2.0};
    CHECK_THROWS_AS(nf::rk54_integrate(blow, 0.0, 2.0, {}, cps), nf::NumericalError);
}

TEST_CASE("zero-kernel problem: Euler reproduces the scalar decay per node") {
    const auto p = nf::make_zero_kernel_problem(nf::ProblemId::P1);
    const auto sys = nf::build_fe_collocation(p, 8);
    const double h = 0.05;
    const std::vector<double> cps{0.0, 0.5};
    const auto traj = nf::euler_integrate(sys, 0.0, 0.5, h, cps);
    const nf::UniformGrid grid(p.interval, 8);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        double u = p.initial(grid[i]);
        for (int k = 0; k < 10; ++k) u += h * (-u + p.forcing(grid[i], k * h));
        CHECK(traj.states[1][i] == doctest::Approx(u).epsilon(1e-14));
    }
}
