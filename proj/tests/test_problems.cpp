#include "nf/problems.hpp"

#include <doctest.h>

#include <cmath>

using nf::ProblemId;

// Closed forms evaluated to 30 digits and frozen.
TEST_CASE("zeta integrals") {
    struct Case {
        ProblemId id;
        double value;
    };
    const Case cases[] = {
        {ProblemId::P1, 1.9334214962007134030811},
        {ProblemId::P2, 2.0 / 21.0},
        {ProblemId::P3, 0.66290883183401623252962},  // atan(4) / 2
        {ProblemId::P4, 1.4936482656248540507989},   // sqrt(pi) erf(1)
        {ProblemId::P5, 2.3504023872876029137648},   // e - 1/e
        {ProblemId::P6, 0.5},
        {ProblemId::P7p, M_PI},
        {ProblemId::P8p, 1.5238962756959047988028},  // 2 pi / sqrt(17)
        {ProblemId::P9p, 8.0 / 3.0},
        {ProblemId::P10p, 1.1070787283070294181164}, // 2 pi C(20,10) / 2^20
    };
    for (const auto& c : cases) {
        CAPTURE(nf::to_string(c.id));
        CHECK(nf::zeta_integral(c.id) == doctest::Approx(c.value).epsilon(1e-12));
        CHECK(nf::make_problem(c.id).zeta0 == nf::zeta_integral(c.id));
    }
}

TEST_CASE("problem ids") {
    CHECK(nf::all_problems().size() == 10);
    CHECK(nf::parse_problem_id("p9P") == ProblemId::P9p);
    CHECK(nf::parse_problem_id("P1") == ProblemId::P1);
    CHECK(nf::to_string(ProblemId::P10p) == "P10p");
    CHECK_THROWS_AS(nf::parse_problem_id("P11"), std::invalid_argument);
    CHECK(nf::is_periodic(ProblemId::P7p));
    CHECK_FALSE(nf::is_periodic(ProblemId::P6));
}

TEST_CASE("domains and parameters") {
    const auto p1 = nf::make_problem(ProblemId::P1);
    CHECK(p1.interval.a == -1.0);
    CHECK(p1.interval.b == 1.0);
    CHECK_FALSE(p1.periodic());
    const auto p8 = nf::make_problem(ProblemId::P8p);
    CHECK(p8.periodic());
    CHECK(p8.interval.length() == doctest::Approx(2.0 * M_PI));
    for (ProblemId id : nf::all_problems()) {
        const auto p = nf::make_problem(id);
        CHECK(p.params.D == 0.8);
        CHECK(p.params.gamma == 0.5);
        CHECK(p.params.k == 5.0);
        CHECK(p.params.theta == 0.3);
        CHECK(p.has_exact());
    }
}

// u = theta + (1/k) log((1 - g)/g), g = D exp(-gamma t - q(x)), evaluated to 30 digits.
TEST_CASE("exact solution values") {
    const auto p1 = nf::make_problem(ProblemId::P1);
    CHECK(p1.exact(0.0, 0.0) == doctest::Approx(0.0227411277760218762331).epsilon(1e-14));
    CHECK(p1.exact(0.5, 0.3) == doctest::Approx(0.270944173749803898140).epsilon(1e-14));
    CHECK(p1.exact_dt(0.5, 0.3) == doctest::Approx(0.215636230207962520746).epsilon(1e-13));
    CHECK(p1.initial(0.5) == p1.exact(0.5, 0.0));

    const auto p7 = nf::make_problem(ProblemId::P7p);
    CHECK(p7.exact(1.0, 0.2) == doctest::Approx(0.267445931579862240211).epsilon(1e-14));
    CHECK(p7.exact_dt(1.0, 0.2) == doctest::Approx(0.217676640495260125249).epsilon(1e-13));
}

TEST_CASE("time derivative matches central differences") {
    for (ProblemId id : {ProblemId::P3, ProblemId::P9p}) {
        const auto p = nf::make_problem(id);
        for (double x : {-0.9, 0.0, 0.6}) {
            for (double t : {0.1, 0.5, 0.95}) {
                const double h = 1e-5;
                const double fd = (p.exact(x, t + h) - p.exact(x, t - h)) / (2.0 * h);
                CHECK(nf::exact_time_derivative(p, x, t) == doctest::Approx(fd).epsilon(1e-8));
            }
        }
    }
}

TEST_CASE("exact solution maps back through the firing rate") {
    const auto p = nf::make_problem(ProblemId::P4);
    for (double x : {-1.0, 0.3}) {
        const double g = 0.8 * std::exp(-0.5 * 0.4 - x * x);
        CHECK(p.firing.eval(p.exact(x, 0.4)) == doctest::Approx(g).epsilon(1e-14));
    }
}

TEST_CASE("kernel shape") {
    const auto p = nf::make_problem(ProblemId::P5);
    const double x = 0.4, y = -0.7;
    CHECK(p.kernel(x, y) == doctest::Approx(std::exp(-x * x + y * y) * std::exp(-y)).epsilon(1e-15));
    REQUIRE(p.kernel.separable.has_value());
    CHECK(p.kernel.separable->x_factor(x) * p.kernel.separable->y_factor(y) ==
          doctest::Approx(p.kernel(x, y)).epsilon(1e-15));
    const auto q = nf::make_problem(ProblemId::P10p);
    CHECK(q.kernel(1.0, 2.0) == doctest::Approx(std::exp(-std::pow(std::cos(1.0), 2) + std::pow(std::cos(2.0), 2)) *
                                                std::pow(std::cos(2.0), 20)).epsilon(1e-14));
}

TEST_CASE("continuum residual vanishes at reference resolution") {
    const auto p1 = nf::make_problem(ProblemId::P1);
    const auto rule = nf::clenshaw_curtis(2048);
    CHECK(std::abs(nf::continuum_residual(p1, 0.0, 0.0, rule)) <= 1e-9);
    for (ProblemId id : nf::all_problems()) {
        const auto p = nf::make_problem(id);
        const bool kinked = id == ProblemId::P6 || id == ProblemId::P9p;
        const auto ref = nf::reference_rule(p, kinked ? 2 : 1);
        double worst = 0.0;
        for (int i = 0; i <= 20; ++i) {
            const double x = p.interval.a + p.interval.length() * i / 20.0;
            for (int k = 0; k <= 10; ++k) {
                worst = std::max(worst, std::abs(nf::continuum_residual(p, x, k / 10.0, ref)));
            }
        }
        CAPTURE(nf::to_string(id));
        CHECK(worst <= 1e-8);
    }
}

TEST_CASE("zero-kernel problem reduces to decay plus forcing") {
    const auto z = nf::make_zero_kernel_problem(ProblemId::P1);
    CHECK(z.zeta0 == 0.0);
    CHECK(z.kernel(0.2, 0.3) == 0.0);
    const double x = 0.25, t = 0.6;
    CHECK(z.forcing(x, t) == doctest::Approx(z.exact_dt(x, t) + z.exact(x, t)).epsilon(1e-15));
    CHECK(std::abs(nf::continuum_residual(z, x, t, nf::reference_rule(z))) < 1e-14);
}
