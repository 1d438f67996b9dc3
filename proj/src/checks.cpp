// Property suites run by `nf check`. Every expected value here is analytic.
#include "nf/harness.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace nf {

namespace {

struct Suite {
    std::vector<CheckOutcome> out;

    void expect(std::string name, bool ok, const std::string& detail = {}) {
        out.push_back({std::move(name), ok, detail});
    }

    void near(std::string name, double got, double want, double tol) {
        std::ostringstream d;
        d.precision(3);
        d << "got " << got << " want " << want << " |diff| " << std::abs(got - want) << " tol " << tol;
        expect(std::move(name), std::abs(got - want) <= tol, d.str());
    }
};

void quadrature_suite(Suite& s) {
    const Interval ref(-1.0, 1.0);
    const auto t2 = trapezium_rule(ref, 2);
    s.expect("trapezium n=2 nodes/weights",
             t2.nodes == std::vector<double>{-1.0, 0.0, 1.0} &&
                 t2.weights == std::vector<double>{0.5, 1.0, 0.5});
    for (std::size_t n : {1u, 7u, 64u}) {
        s.near("trapezium weight sum n=" + std::to_string(n), trapezium_rule(ref, n).weight_sum(), 2.0,
               1e-12 * 2.0);
    }
    s.near("periodic trapezium weight sum",
           trapezium_rule(Interval(0.0, 2.0 * std::numbers::pi, true), 33).weight_sum(),
           2.0 * std::numbers::pi, 1e-12 * 2.0 * std::numbers::pi);

    const auto cc2 = clenshaw_curtis(2);
    s.near("CC n=2 w0", cc2.weights[0], 1.0 / 3.0, 1e-15);
    s.near("CC n=2 w1", cc2.weights[1], 4.0 / 3.0, 1e-15);
    s.near("CC n=2 w2", cc2.weights[2], 1.0 / 3.0, 1e-15);
    for (std::size_t n : {2u, 4u, 8u, 16u, 32u}) {
        const auto cc = clenshaw_curtis(n);
        s.near("CC weight sum n=" + std::to_string(n), cc.weight_sum(), 2.0, 2e-12);
        if (n > 16) continue;
        double worst = 0.0;
        for (std::size_t p = 0; p <= n; ++p) {
            const double exact = p % 2 == 1 ? 0.0 : 2.0 / static_cast<double>(p + 1);
            const double got = cc([p](double y) { return std::pow(y, static_cast<double>(p)); });
            worst = std::max(worst, std::abs(got - exact));
        }
        s.near("CC monomial exactness n=" + std::to_string(n), worst, 0.0, 1e-13);
    }

    const auto g = gauss_legendre_2();
    s.near("Gauss-2 y^2", g([](double y) { return y * y; }), 2.0 / 3.0, 1e-15);
    s.near("Gauss-2 y^3", g([](double y) { return y * y * y; }), 0.0, 1e-15);
    {
        // Cubic on a mapped element [0.3, 0.7]: exact integral of x^3 - x.
        const double x0 = 0.3, x1 = 0.7;
        double got = 0.0;
        for (std::size_t q = 0; q < g.size(); ++q) {
            const double x = x0 + (1.0 + g.nodes[q]) * (x1 - x0) / 2.0;
            got += g.weights[q] * (x * x * x - x) * (x1 - x0) / 2.0;
        }
        const auto prim = [](double x) { return x * x * x * x / 4.0 - x * x / 2.0; };
        s.near("Gauss-2 mapped cubic", got, prim(x1) - prim(x0), 1e-15);
    }
    {
        std::vector<double> ns, errs;
        const double exact = std::exp(1.0) - std::exp(-1.0);
        for (std::size_t n = 8; n <= 512; n *= 2) {
            ns.push_back(static_cast<double>(n));
            errs.push_back(std::abs(trapezium_rule(ref, n)([](double y) { return std::exp(y); }) - exact));
        }
        const double order = fitted_order(ns, errs);
        std::ostringstream d;
        d << "order " << order;
        s.expect("trapezium order on e^y in [1.9, 2.1]", order >= 1.9 && order <= 2.1, d.str());
    }
}

void projection_suite(Suite& s) {
    const Interval ref(-1.0, 1.0);
    {
        const TentBasis basis(UniformGrid(ref, 10));
        double sum = 0.0;
        for (std::size_t i = 0; i <= 10; ++i) sum += basis.eval(i, 0.37);
        s.near("tent partition of unity at 0.37", sum, 1.0, 1e-15);
        bool lagrange = true;
        for (std::size_t i = 0; i <= 10; ++i) {
            for (std::size_t j = 0; j <= 10; ++j) {
                lagrange &= basis.eval(i, basis.grid()[j]) == (i == j ? 1.0 : 0.0);
            }
        }
        s.expect("tent Lagrange property", lagrange);
    }
    {
        // Idempotence: sample the interpolant at its own nodes and interpolate again.
        const TentBasis tent(UniformGrid(ref, 16));
        std::vector<double> v(17);
        for (std::size_t i = 0; i <= 16; ++i) v[i] = std::sin(3.0 * tent.grid()[i]);
        double worst = 0.0;
        std::vector<double> again(17);
        for (std::size_t i = 0; i <= 16; ++i) again[i] = piecewise_linear_interp(v, tent, tent.grid()[i]);
        for (std::size_t i = 0; i <= 16; ++i) worst = std::max(worst, std::abs(again[i] - v[i]));
        s.near("tent idempotence", worst, 0.0, 0.0);

        const ChebyshevBasis cheb(ChebyshevGrid(12));
        std::vector<double> c(13), c2(13);
        for (std::size_t i = 0; i <= 12; ++i) c[i] = std::exp(cheb.grid()[i]);
        for (std::size_t i = 0; i <= 12; ++i) c2[i] = barycentric_interp(c, cheb, cheb.grid()[i]);
        worst = 0.0;
        for (std::size_t i = 0; i <= 12; ++i) worst = std::max(worst, std::abs(c2[i] - c[i]));
        s.near("Chebyshev idempotence", worst, 0.0, 0.0);

        double rep = 0.0;
        const ChebyshevBasis c5(ChebyshevGrid(5));
        std::vector<double> p(6);
        auto cubic = [](double x) { return x * x * x - 2.0 * x; };
        for (std::size_t i = 0; i <= 5; ++i) p[i] = cubic(c5.grid()[i]);
        for (int k = 0; k <= 100; ++k) {
            const double x = -1.0 + 0.02 * k + 0.003;
            if (x > 1.0) break;
            rep = std::max(rep, std::abs(barycentric_interp(p, c5, x) - cubic(x)));
        }
        s.near("Chebyshev reproduces x^3 - 2x", rep, 0.0, 1e-13);
    }
    {
        const std::size_t m = 9;
        std::vector<Complex> v(m);
        for (std::size_t l = 0; l < m; ++l) {
            v[l] = Complex(std::cos(1.3 * static_cast<double>(l) + 0.2), std::sin(0.7 * static_cast<double>(l * l)));
        }
        const auto c = dft_forward(v);
        const auto back = dft_backward(c);
        double worst = 0.0, norm_v = 0.0, norm_c = 0.0;
        for (std::size_t l = 0; l < m; ++l) {
            worst = std::max(worst, std::abs(back[l] - v[l]));
            norm_v += std::norm(v[l]);
            norm_c += std::norm(c[l]);
        }
        s.near("DFT round trip", worst, 0.0, 1e-13);
        s.near("Parseval", norm_v / (static_cast<double>(m) * norm_c), 1.0, 1e-11);

        const auto direct = dft_forward(v, DftBackend::direct);
        double diff = 0.0;
        for (std::size_t j = 0; j < m; ++j) diff = std::max(diff, std::abs(direct[j] - c[j]));
        s.near("FFT vs direct DFT", diff, 0.0, 1e-13);

        // Fourier projector idempotence on a band-limited function.
        const FourierBasis fb(4);
        const auto xs = fb.sample_points();
        std::vector<Complex> samp(xs.size());
        for (std::size_t l = 0; l < xs.size(); ++l) samp[l] = std::sin(2.0 * xs[l]) + 0.5;
        const auto coeffs = dft_forward(samp);
        std::vector<Complex> resampled(xs.size());
        for (std::size_t l = 0; l < xs.size(); ++l) resampled[l] = fourier_reconstruct(coeffs, xs[l]);
        const auto coeffs2 = dft_forward(resampled);
        double idem = 0.0;
        for (std::size_t j = 0; j < coeffs.size(); ++j) idem = std::max(idem, std::abs(coeffs2[j] - coeffs[j]));
        s.near("Fourier idempotence", idem, 0.0, 1e-13);
    }
}

void timestep_suite(Suite& s) {
    auto decay = make_ode_system({1.0}, [](double, std::span<const double> a, std::span<double> o) {
        o[0] = -a[0];
    });
    {
        const std::vector<double> cps{0.1};
        const auto traj = euler_integrate(decay, 0.0, 0.1, 0.1, cps);
        s.near("Euler one step of u' = -u", traj.states.back()[0], 0.9, 1e-15);
    }
    {
        std::vector<double> inv_h, errs;
        for (double h : {1e-2, 5e-3, 2.5e-3, 1.25e-3}) {
            const std::vector<double> cps{1.0};
            const auto traj = euler_integrate(decay, 0.0, 1.0, h, cps);
            inv_h.push_back(1.0 / h);
            errs.push_back(std::abs(traj.states.back()[0] - std::exp(-1.0)));
        }
        const double order = fitted_order(inv_h, errs);
        std::ostringstream d;
        d << "order " << order;
        s.expect("Euler order on u' = -u in [0.95, 1.05]", order >= 0.95 && order <= 1.05, d.str());
    }
    {
        Rk54Options o;
        o.rtol = 1e-8;
        o.atol = 1e-10;
        const std::vector<double> cps{1.0};
        const auto traj = rk54_integrate(decay, 0.0, 1.0, o, cps);
        s.near("rk54 u' = -u at t = 1", traj.states.back()[0], std::exp(-1.0), 1e-7);
    }
}

void residual_suite(Suite& s) {
    for (ProblemId id : all_problems()) {
        const TestProblem p = make_problem(id);
        const bool kinked = id == ProblemId::P6 || id == ProblemId::P9p;
        const QuadratureRule rule = reference_rule(p, kinked ? 2 : 1);
        double worst = 0.0;
        for (int ix = 0; ix <= 20; ++ix) {
            const double x = p.interval.a + p.interval.length() * ix / 20.0;
            for (int it = 0; it <= 10; ++it) {
                worst = std::max(worst, std::abs(continuum_residual(p, x, it / 10.0, rule)));
            }
        }
        s.near("continuum residual sweep " + p.name, worst, 0.0, 1e-8);
    }
}

void sandwich_suite(Suite& s) {
    const std::vector<ProblemId> ids{ProblemId::P1, ProblemId::P2, ProblemId::P3,
                                     ProblemId::P4, ProblemId::P5, ProblemId::P6};
    SchemeSpec fe;
    fe.kind = SchemeKind::fe_collocation;
    SchemeSpec cc;
    cc.kind = SchemeKind::cheb_collocation;
    cc.cheb_quadrature = ChebQuadrature::clenshaw_curtis;
    const StepperConfig stepper = StepperConfig::rk54(1e-10, 1e-13);
    for (ProblemId id : ids) {
        const TestProblem p = make_problem(id);
        for (const SchemeSpec& spec : {fe, cc}) {
            for (std::size_t n : {16u, 32u, 64u}) {
                const auto r = sandwich_check(p, spec, n, stepper);
                std::ostringstream d;
                d.precision(3);
                d << "ratio " << r.ratio << " in [" << r.lower << ", " << r.upper << "]"
                  << (r.inconclusive ? " (inconclusive: projector error at temporal floor)" : "");
                s.expect("sandwich " + p.name + " " + to_string(spec.kind) + " n=" + std::to_string(n),
                         r.pass || r.inconclusive, d.str());
            }
        }
    }
}

} // namespace

std::vector<CheckOutcome> run_check_suite(const std::string& suite) {
    Suite s;
    if (suite == "quadrature" || suite == "units") quadrature_suite(s);
    if (suite == "projection" || suite == "units") projection_suite(s);
    if (suite == "timestep" || suite == "units") timestep_suite(s);
    if (suite == "residual") residual_suite(s);
    if (suite == "sandwich") sandwich_suite(s);
    if (s.out.empty()) {
        throw std::invalid_argument("unknown check suite '" + suite +
                                    "' (expected quadrature, projection, timestep, units, residual "
                                    "or sandwich)");
    }
    return s.out;
}

} // namespace nf
