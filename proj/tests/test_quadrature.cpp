#include "nf/quadrature.hpp"

#include <doctest.h>

#include <cmath>
#include <vector>

namespace {

// Direct O(n^2) Clenshaw-Curtis weights from the cosine-sum formula.
std::vector<double> cc_weights_direct(std::size_t n) {
    std::vector<double> w(n + 1);
    for (std::size_t j = 0; j <= n; ++j) {
        const double theta = M_PI * static_cast<double>(j) / static_cast<double>(n);
        double s = 1.0;
        for (std::size_t k = 1; 2 * k <= n; ++k) {
            const double b = (2 * k == n) ? 1.0 : 2.0;
            const double kk = static_cast<double>(k);
            s -= b / (4.0 * kk * kk - 1.0) * std::cos(2.0 * kk * theta);
        }
        const double c = (j == 0 || j == n) ? 1.0 : 2.0;
        w[j] = c * s / static_cast<double>(n);
    }
    return w;
}

constexpr double kZetaP1 = 1.9334214962007134030811;   // int e^y cos y over [-1,1]
constexpr double kSqrtPiErf1 = 1.4936482656248540507989;

} // namespace

TEST_CASE("trapezium n=2 on [-1,1]") {
    const auto r = nf::trapezium_rule({-1.0, 1.0}, 2);
    REQUIRE(r.size() == 3);
    CHECK(r.nodes == std::vector<double>{-1.0, 0.0, 1.0});
    CHECK(r.weights == std::vector<double>{0.5, 1.0, 0.5});
    CHECK(r([](double y) { return y; }) == 0.0);
    CHECK(r([](double) { return 0.0; }) == 0.0);
}

TEST_CASE("weights sum to the interval length") {
    for (std::size_t n : {1u, 3u, 10u, 257u}) {
        CHECK(nf::trapezium_rule({-2.0, 5.0}, n).weight_sum() == doctest::Approx(7.0).epsilon(1e-12));
    }
    const auto ring = nf::trapezium_rule({0.0, 2.0 * M_PI, true}, 9);
    CHECK(ring.size() == 9);
    CHECK(ring.weight_sum() == doctest::Approx(2.0 * M_PI).epsilon(1e-12));
    for (std::size_t n : {2u, 4u, 8u, 16u, 32u}) {
        CHECK(nf::clenshaw_curtis(n).weight_sum() == doctest::Approx(2.0).epsilon(1e-12));
    }
}

TEST_CASE("trapezium on e^y cos y with Richardson extrapolation") {
    const auto zeta = [](double y) { return std::exp(y) * std::cos(y); };
    const double t4096 = nf::trapezium_rule({-1.0, 1.0}, 4096)(zeta);
    const double t2048 = nf::trapezium_rule({-1.0, 1.0}, 2048)(zeta);
    const double richardson = (4.0 * t4096 - t2048) / 3.0;
    CHECK(std::abs(richardson - kZetaP1) < 1e-12);
    // The raw n=4096 value carries the O(h^2) error of about 2.64e-8.
    CHECK(std::abs(t4096 - kZetaP1) < 3e-8);
    CHECK(std::abs(t4096 - kZetaP1) > 2e-8);
}

TEST_CASE("trapezium converges at second order on e^y") {
    const double exact = std::exp(1.0) - std::exp(-1.0);
    double prev = 0.0;
    for (std::size_t n = 8; n <= 512; n *= 2) {
        const double err = std::abs(nf::trapezium_rule({-1.0, 1.0}, n)([](double y) { return std::exp(y); }) - exact);
        if (prev > 0.0) CHECK(std::log2(prev / err) == doctest::Approx(2.0).epsilon(0.01));
        prev = err;
    }
}

TEST_CASE("periodic trapezium is spectrally accurate") {
    const auto ring = nf::trapezium_rule({0.0, 2.0 * M_PI, true}, 32);
    const double got = ring([](double y) { return std::exp(std::cos(y)); });
    // 2 pi I_0(1)
    CHECK(got == doctest::Approx(2.0 * M_PI * 1.2660658777520083356).epsilon(1e-14));
}

TEST_CASE("clenshaw-curtis n=2 weights") {
    const auto r = nf::clenshaw_curtis(2);
    REQUIRE(r.size() == 3);
    CHECK(r.nodes[0] == 1.0);
    CHECK(r.nodes[1] == 0.0);
    CHECK(r.nodes[2] == -1.0);
    CHECK(r.weights[0] == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(r.weights[1] == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
    CHECK(r.weights[2] == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("clenshaw-curtis weights match the direct cosine sum") {
    for (std::size_t n : {2u, 3u, 4u, 7u, 16u, 33u, 128u, 1000u}) {
        CAPTURE(n);
        const auto fast = nf::clenshaw_curtis(n).weights;
        const auto slow = cc_weights_direct(n);
        REQUIRE(fast.size() == slow.size());
        for (std::size_t j = 0; j < fast.size(); ++j) CHECK(std::abs(fast[j] - slow[j]) < 1e-14);
    }
}

TEST_CASE("clenshaw-curtis is exact on monomials up to degree n") {
    for (std::size_t n : {2u, 4u, 8u, 16u}) {
        const auto r = nf::clenshaw_curtis(n);
        for (std::size_t p = 0; p <= n; ++p) {
            const double exact = (p % 2 == 1) ? 0.0 : 2.0 / static_cast<double>(p + 1);
            const double got = r([p](double y) { return std::pow(y, static_cast<double>(p)); });
            CHECK(std::abs(got - exact) <= 1e-13);
        }
    }
    CHECK(std::abs(nf::clenshaw_curtis(4)([](double y) { return y * y * y * y; }) - 0.4) <= 1e-14);
}

TEST_CASE("clenshaw-curtis n=16 on a gaussian") {
    const double got = nf::clenshaw_curtis(16)([](double y) { return std::exp(-y * y); });
    CHECK(std::abs(got - kSqrtPiErf1) < 1e-10);
}

TEST_CASE("two-point gauss") {
    const auto g = nf::gauss_legendre_2();
    REQUIRE(g.size() == 2);
    CHECK(g.weights[0] + g.weights[1] == 2.0);
    CHECK(g.weights[0] * g.nodes[0] * g.nodes[0] + g.weights[1] * g.nodes[1] * g.nodes[1] ==
          doctest::Approx(2.0 / 3.0).epsilon(1e-15));
    CHECK(g([](double y) { return y * y * y; }) == 0.0);
    CHECK(std::abs(g([](double y) { return y * y; }) - 2.0 / 3.0) <= 1e-15);
    CHECK(nf::apply(g, [](double) { return 0.0; }) == 0.0);
}

TEST_CASE("two-point gauss after affine mapping is exact on cubics") {
    const auto g = nf::gauss_legendre_2();
    const double a = 0.25, b = 0.75;
    const auto cubic = [](double x) { return 3.0 * x * x * x - x * x + 2.0 * x - 1.0; };
    double got = 0.0;
    for (std::size_t q = 0; q < 2; ++q) {
        const double x = a + (1.0 + g.nodes[q]) * (b - a) / 2.0;
        got += g.weights[q] * cubic(x) * (b - a) / 2.0;
    }
    const auto anti = [](double x) { return 0.75 * x * x * x * x - x * x * x / 3.0 + x * x - x; };
    CHECK(std::abs(got - (anti(b) - anti(a))) < 1e-15);
}
