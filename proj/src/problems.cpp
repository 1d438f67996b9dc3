#include "nf/problems.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace nf {

namespace {

struct ProblemInfo {
    ProblemId id;
    const char* name;
    bool periodic;
};

constexpr ProblemInfo kProblems[] = {
    {ProblemId::P1, "P1", false},   {ProblemId::P2, "P2", false},   {ProblemId::P3, "P3", false},
    {ProblemId::P4, "P4", false},   {ProblemId::P5, "P5", false},   {ProblemId::P6, "P6", false},
    {ProblemId::P7p, "P7p", true},  {ProblemId::P8p, "P8p", true},  {ProblemId::P9p, "P9p", true},
    {ProblemId::P10p, "P10p", true},
};

const ProblemInfo& info(ProblemId id) {
    for (const auto& p : kProblems) {
        if (p.id == id) return p;
    }
    throw std::invalid_argument("unknown problem id");
}

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

} // namespace

std::string to_string(ProblemId id) { return info(id).name; }

ProblemId parse_problem_id(std::string_view token) {
    const std::string t = lower(token);
    for (const auto& p : kProblems) {
        if (lower(p.name) == t) return p.id;
    }
    throw std::invalid_argument("unknown problem id '" + std::string(token) +
                                "' (expected P1..P6 or P7p..P10p)");
}

bool is_periodic(ProblemId id) { return info(id).periodic; }

const std::vector<ProblemId>& all_problems() {
    static const std::vector<ProblemId> ids = [] {
        std::vector<ProblemId> v;
        for (const auto& p : kProblems) v.push_back(p.id);
        return v;
    }();
    return ids;
}

std::function<double(double)> zeta_function(ProblemId id) {
    switch (id) {
    case ProblemId::P1: return [](double y) { return std::exp(y) * std::cos(y); };
    case ProblemId::P2: return [](double y) { return std::pow(y, 20); };
    case ProblemId::P3: return [](double y) { return 1.0 / (1.0 + 16.0 * y * y); };
    case ProblemId::P4: return [](double y) { return std::exp(-y * y); };
    case ProblemId::P5: return [](double y) { return std::exp(-y); };
    case ProblemId::P6: return [](double y) { return std::pow(std::abs(y), 3); };
    case ProblemId::P7p: return [](double y) { const double c = std::cos(y); return c * c; };
    case ProblemId::P8p:
        return [](double y) { const double c = std::cos(y); return 1.0 / (1.0 + 16.0 * c * c); };
    case ProblemId::P9p: return [](double y) { return std::pow(std::abs(std::cos(y)), 3); };
    case ProblemId::P10p: return [](double y) { return std::pow(std::cos(y), 20); };
    }
    throw std::invalid_argument("unknown problem id");
}

double zeta_integral(ProblemId id) {
    const auto zeta = zeta_function(id);
    double coarse = 0.0;
    double fine = 0.0;
    if (is_periodic(id)) {
        const Interval ring(0.0, 2.0 * std::numbers::pi, true);
        coarse = trapezium_rule(ring, 8192)(zeta);
        fine = trapezium_rule(ring, 16384)(zeta);
    } else {
        coarse = clenshaw_curtis(4096)(zeta);
        fine = clenshaw_curtis(8192)(zeta);
    }
    if (std::abs(coarse - fine) > 1e-11 * std::max(std::abs(fine), 1e-300)) {
        throw NumericalError("zeta integral for " + to_string(id) +
                             " failed the resolution cross-check");
    }
    return fine;
}

namespace {

// Everything that depends on the spatial profile q(x) is built from the same closure.
TestProblem manufactured(std::string name, Interval interval, std::function<double(double)> q,
                         std::function<double(double)> zeta, double zeta0, bool with_kernel) {
    TestProblem p;
    p.name = std::move(name);
    p.interval = interval;
    p.params = ProblemParams{};
    p.firing = FiringRate(p.params.k, p.params.theta);
    p.zeta0 = with_kernel ? zeta0 : 0.0;

    const ProblemParams prm = p.params;
    const FiringRate fr = p.firing;
    auto profile = [prm, q](double x, double t) { return prm.D * std::exp(-prm.gamma * t - q(x)); };

    p.exact = [fr, profile](double x, double t) { return fr.inverse(profile(x, t)); };
    // d/dt f^{-1}(g) = -g_t / (k g (1 - g)) with g_t = -gamma g.
    p.exact_dt = [prm, profile](double x, double t) {
        return prm.gamma / (prm.k * (1.0 - profile(x, t)));
    };
    p.initial = [exact = p.exact, t0 = p.t0](double x) { return exact(x, t0); };

    const double z0 = p.zeta0;
    p.forcing = [fr, profile, z0, dt = p.exact_dt](double x, double t) {
        const double g = profile(x, t);
        return dt(x, t) + fr.inverse(g) - z0 * g;
    };

    if (with_kernel) {
        p.kernel.eval = [q, zeta](double x, double y) { return std::exp(-q(x) + q(y)) * zeta(y); };
        p.kernel.separable = Kernel::Separable{
            [q](double x) { return std::exp(-q(x)); },
            [q, zeta](double y) { return std::exp(q(y)) * zeta(y); },
        };
    } else {
        p.kernel = Kernel::zero();
    }
    return p;
}

std::function<double(double)> profile_for(ProblemId id) {
    if (is_periodic(id)) {
        return [](double x) { const double c = std::cos(x); return c * c; };
    }
    return [](double x) { return x * x; };
}

Interval domain_for(ProblemId id) {
    return is_periodic(id) ? Interval(0.0, 2.0 * std::numbers::pi, true) : Interval(-1.0, 1.0);
}

} // namespace

TestProblem make_problem(ProblemId id) {
    return manufactured(to_string(id), domain_for(id), profile_for(id), zeta_function(id),
                        zeta_integral(id), true);
}

TestProblem make_zero_kernel_problem(ProblemId base) {
    return manufactured(to_string(base) + "-zero-kernel", domain_for(base), profile_for(base),
                        zeta_function(base), 0.0, false);
}

double exact_time_derivative(const TestProblem& problem, double x, double t) {
    if (!problem.exact_dt) {
        throw std::invalid_argument("problem '" + problem.name + "' has no closed-form solution");
    }
    return problem.exact_dt(x, t);
}

double continuum_residual(const TestProblem& problem, double x, double t,
                          const QuadratureRule& ref_quad) {
    if (!problem.has_exact()) {
        throw std::invalid_argument("problem '" + problem.name + "' has no closed-form solution");
    }
    const double integral = ref_quad([&](double y) {
        return problem.kernel(x, y) * problem.firing.eval(problem.exact(y, t));
    });
    return problem.exact_dt(x, t) + problem.exact(x, t) - integral - problem.forcing(x, t);
}

QuadratureRule reference_rule(const TestProblem& problem, std::size_t resolution_factor) {
    const std::size_t factor = std::max<std::size_t>(resolution_factor, 1);
    if (problem.periodic()) {
        return trapezium_rule(problem.interval, 4096 * factor);
    }
    QuadratureRule cc = clenshaw_curtis(2048 * factor);
    // Map [-1, 1] onto the problem interval.
    const double a = problem.interval.a;
    const double b = problem.interval.b;
    const double half = 0.5 * (b - a);
    for (std::size_t j = 0; j < cc.size(); ++j) {
        cc.nodes[j] = a + half * (cc.nodes[j] + 1.0);
        cc.weights[j] *= half;
    }
    cc.interval = problem.interval;
    return cc;
}

} // namespace nf
