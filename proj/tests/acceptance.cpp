// Acceptance run: one PASS/FAIL line per criterion, exit status = number of failures.
#include "nf/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

using namespace nf;

namespace {

int failures = 0;

void report(int id, bool pass, const std::string& title, const std::string& detail) {
    std::printf("criterion %d [%s] %s\n    %s\n", id, pass ? "PASS" : "FAIL", title.c_str(), detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

double seconds(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

SchemeSpec scheme(SchemeKind kind) {
    SchemeSpec s;
    s.kind = kind;
    return s;
}

SchemeSpec cheb(ChebQuadrature q) {
    SchemeSpec s = scheme(SchemeKind::cheb_collocation);
    s.cheb_quadrature = q;
    return s;
}

SchemeSpec galerkin(FeGalerkinVariant v) {
    SchemeSpec s = scheme(SchemeKind::fe_galerkin);
    s.fe_variant = v;
    return s;
}

StudyResult study(const std::vector<ProblemId>& problems, const SchemeSpec& spec,
                  std::vector<std::size_t> ns, StepperConfig stepper = StepperConfig::rk54(1e-6, 1e-9)) {
    StudyConfig cfg;
    cfg.problems = problems;
    cfg.scheme = spec;
    cfg.n_values = std::move(ns);
    cfg.stepper = stepper;
    return run_study(cfg);
}

struct Fit {
    double order = std::nan("");
    std::size_t points = 0;
};

// Least-squares order over the records of one problem whose error exceeds 10x the floor.
Fit fit_above_floor(const StudyResult& res, std::size_t problem_index, std::size_t per_problem) {
    std::vector<double> ns, es;
    const double floor = res.floors[problem_index];
    for (std::size_t k = 0; k < per_problem; ++k) {
        const auto& r = res.records[problem_index * per_problem + k];
        if (r.error > 10.0 * floor) {
            ns.push_back(static_cast<double>(r.n));
            es.push_back(r.error);
        }
    }
    Fit f;
    f.points = ns.size();
    if (ns.size() >= 2) f.order = fitted_order(ns, es);
    return f;
}

double error_at(const StudyResult& res, const std::string& problem, std::size_t n) {
    for (const auto& r : res.records) {
        if (r.problem == problem && r.n == n) return r.error;
    }
    return std::nan("");
}

void second_order_family(int id, const std::string& title, const std::vector<ProblemId>& problems,
                         const SchemeSpec& spec, double budget_s) {
    const std::vector<std::size_t> ns{16, 32, 64, 128, 256, 512};
    const auto start = std::chrono::steady_clock::now();
    const auto res = study(problems, spec, ns);
    const double wall = seconds(start);
    bool ok = true;
    std::string detail;
    for (std::size_t i = 0; i < problems.size(); ++i) {
        const Fit f = fit_above_floor(res, i, ns.size());
        const bool in = f.points >= 2 && f.order >= 1.8 && f.order <= 2.2;
        ok &= in;
        detail += to_string(problems[i]) + " " + fmt("%.3f", f.order) + (in ? "" : "(!)") + "  ";
    }
    detail += "fitted orders, target [1.8, 2.2]";
    if (budget_s > 0.0) {
        ok &= wall < budget_s;
        detail += "; wall " + fmt("%.1f s", wall) + " (budget " + fmt("%.0f s)", budget_s);
    }
    report(id, ok, title, detail);
}

void criterion3() {
    const std::vector<std::size_t> ns{8, 16, 32, 64, 128};
    const auto spec = cheb(ChebQuadrature::clenshaw_curtis);
    const auto res = study({ProblemId::P1, ProblemId::P4, ProblemId::P5, ProblemId::P6}, spec, ns);
    bool ok = true;
    std::string detail = "error at n=32:";
    for (const char* p : {"P1", "P4", "P5"}) {
        const double e = error_at(res, p, 32);
        ok &= e <= 1e-4;
        detail += std::string(" ") + p + " " + fmt("%.2e", e);
    }
    const Fit f6 = fit_above_floor(res, 3, ns.size());
    const bool p6 = f6.points >= 2 && f6.order >= 2.5;
    ok &= p6;
    detail += "; P6 fitted order " + fmt("%.2f", f6.order) + " (>= 2.5)";

    // Plateau: the saturated error at the largest n, at rtol 1e-6 and at rtol 1e-9.
    const auto loose = study({ProblemId::P1}, spec, {64, 128}, StepperConfig::rk54(1e-6, 1e-9));
    const auto tight = study({ProblemId::P1}, spec, {64, 128}, StepperConfig::rk54(1e-9, 1e-12));
    const double plateau_loose = loose.records.back().error;
    const double plateau_tight = tight.records.back().error;
    const bool drop = plateau_tight * 10.0 <= plateau_loose;
    ok &= drop;
    detail += "; P1 plateau " + fmt("%.2e", plateau_loose) + " -> " + fmt("%.2e", plateau_tight) +
              " at rtol 1e-9 (x" + fmt("%.2f", plateau_loose / plateau_tight) + ", need >= 10)";
    report(3, ok, "Chebyshev collocation + Clenshaw-Curtis", detail);
}

void criterion4() {
    const std::vector<ProblemId> six{ProblemId::P1, ProblemId::P2, ProblemId::P3,
                                     ProblemId::P4, ProblemId::P5, ProblemId::P6};
    const std::vector<std::size_t> ns{16, 32, 64, 128, 256, 512};
    const auto res = study(six, galerkin(FeGalerkinVariant::gauss2), ns);
    bool ok = true;
    std::string detail;
    for (std::size_t i = 0; i < six.size(); ++i) {
        const Fit f = fit_above_floor(res, i, ns.size());
        const bool in = f.points >= 2 && f.order >= 1.8 && f.order <= 2.2;
        ok &= in;
        detail += to_string(six[i]) + " " + fmt("%.3f", f.order) + (in ? "" : "(!)") + "  ";
    }
    double worst = 0.0;
    const auto cps = equispaced_checkpoints(0.0, 1.0, 51);
    for (ProblemId id : six) {
        const auto p = make_problem(id);
        const auto col = build_fe_collocation(p, 64);
        const auto lum = build_fe_galerkin(p, 64, FeGalerkinVariant::lumped);
        const auto a = rk54_integrate(col, 0.0, 1.0, {}, cps);
        const auto b = rk54_integrate(lum, 0.0, 1.0, {}, cps);
        for (std::size_t k = 0; k < a.states.size(); ++k) {
            for (std::size_t i = 0; i < a.states[k].size(); ++i) {
                worst = std::max(worst, std::abs(a.states[k][i] - b.states[k][i]));
            }
        }
    }
    ok &= worst <= 1e-12;
    detail += "gauss2 fitted orders; lumped vs collocation max diff " + fmt("%.1e", worst) + " (<= 1e-12)";
    report(4, ok, "FE Galerkin", detail);
}

void criterion5() {
    const std::vector<ProblemId> ring{ProblemId::P7p, ProblemId::P8p, ProblemId::P9p, ProblemId::P10p};
    const std::vector<std::size_t> ns{4, 8, 16, 32, 64};
    const auto res = study(ring, scheme(SchemeKind::spectral_galerkin), ns);
    bool ok = true;
    std::string detail = "error at n=32:";
    for (const char* p : {"P7p", "P8p", "P10p"}) {
        const double e = error_at(res, p, 32);
        ok &= e <= 1e-4;
        detail += std::string(" ") + p + " " + fmt("%.2e", e);
    }
    const Fit f9 = fit_above_floor(res, 2, ns.size());
    ok &= f9.points >= 2 && f9.order >= 2.5;
    detail += "; P9p fitted order " + fmt("%.2f", f9.order) + " (>= 2.5)";

    SchemeOptions direct;
    direct.dft = DftBackend::direct;
    std::mt19937 gen(5);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    double worst = 0.0;
    for (ProblemId id : ring) {
        const auto p = make_problem(id);
        const auto fast = build_spectral_galerkin(p, 10);
        const auto slow = build_spectral_galerkin(p, 10, direct);
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<double> a(fast.dim);
            for (double& v : a) v = dist(gen);
            const auto x = rhs_eval(fast, 0.25, a);
            const auto y = rhs_eval(slow, 0.25, a);
            for (std::size_t i = 0; i < x.size(); ++i) worst = std::max(worst, std::abs(x[i] - y[i]));
        }
    }
    ok &= worst <= 1e-12;
    detail += "; FFT vs direct rhs " + fmt("%.1e", worst) + " (<= 1e-12)";
    report(5, ok, "Spectral Galerkin", detail);
}

void criterion6() {
    EulerSplitConfig cfg;
    try {
        const auto r = euler_split_study(cfg);
        const bool t = r.temporal_order >= 0.9 && r.temporal_order <= 1.1;
        const bool s = r.spatial_order >= 1.8 && r.spatial_order <= 2.2;
        const bool f = r.fit_max_rel_residual < 0.15;
        report(6, t && s && f, "Forward Euler error split",
               "temporal order " + fmt("%.3f", r.temporal_order) + " [0.9, 1.1]; spatial order " +
                   fmt("%.3f", r.spatial_order) + " [1.8, 2.2]; two-term fit max rel residual " +
                   fmt("%.3f", r.fit_max_rel_residual) + " (< 0.15)");
    } catch (const NumericalError& e) {
        report(6, false, "Forward Euler error split", e.what());
    }
}

void criterion7() {
    const auto stepper = StepperConfig::rk54(1e-10, 1e-13);
    int passed = 0, inconclusive = 0, total = 0;
    std::string failed;
    for (ProblemId id : {ProblemId::P1, ProblemId::P2, ProblemId::P3, ProblemId::P4, ProblemId::P5,
                         ProblemId::P6}) {
        const auto p = make_problem(id);
        for (const auto& spec : {scheme(SchemeKind::fe_collocation), cheb(ChebQuadrature::clenshaw_curtis)}) {
            for (std::size_t n : {16u, 32u, 64u}) {
                const auto r = sandwich_check(p, spec, n, stepper);
                ++total;
                if (r.inconclusive) {
                    ++inconclusive;
                } else if (r.pass) {
                    ++passed;
                } else {
                    failed += " " + p.name + "/" + to_string(spec.kind) + "/n=" + std::to_string(n) +
                              " ratio " + fmt("%.2f", r.ratio) + " in [" + fmt("%.2f", r.lower) + ", " +
                              fmt("%.2f", r.upper) + "];";
                }
            }
        }
    }
    const int bad = total - passed - inconclusive;
    std::string detail = std::to_string(passed) + " pass, " + std::to_string(inconclusive) +
                         " inconclusive (projector error at temporal floor), " + std::to_string(bad) +
                         " fail of " + std::to_string(total);
    if (bad > 0) detail += ":" + failed;
    report(7, bad == 0, "Sandwich inequality", detail);
}

void suite_criterion(int id, const std::string& title, const std::string& suite, double budget_s) {
    const auto start = std::chrono::steady_clock::now();
    const auto outcomes = run_check_suite(suite);
    const double wall = seconds(start);
    std::size_t bad = 0;
    std::string failed;
    for (const auto& o : outcomes) {
        if (!o.pass) {
            ++bad;
            failed += " " + o.name + ";";
        }
    }
    std::string detail = std::to_string(outcomes.size() - bad) + "/" + std::to_string(outcomes.size()) +
                         " checks pass";
    if (budget_s > 0.0) detail += ", wall " + fmt("%.2f s", wall) + " (budget " + fmt("%.0f s)", budget_s);
    if (bad > 0) detail += ";" + failed;
    report(id, bad == 0 && (budget_s <= 0.0 || wall < budget_s), title, detail);
}

} // namespace

int main() {
    second_order_family(1, "FE collocation + trapezium",
                        {ProblemId::P1, ProblemId::P2, ProblemId::P3, ProblemId::P4, ProblemId::P5,
                         ProblemId::P6},
                        scheme(SchemeKind::fe_collocation), 120.0);
    second_order_family(2, "Chebyshev collocation + trapezium",
                        {ProblemId::P1, ProblemId::P4, ProblemId::P5},
                        cheb(ChebQuadrature::trapezium), 0.0);
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    suite_criterion(8, "Manufactured-solution residual sweep", "residual", 0.0);
    suite_criterion(9, "Unit property suites", "units", 30.0);
    std::printf("acceptance: %d of 9 criteria failed\n", failures);
    return failures;
}
