#include "nf/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace nf {

void StudyConfig::validate() const {
    for (std::size_t i = 0; i < n_values.size(); ++i) {
        if (n_values[i] < 2) {
            throw std::invalid_argument("n values must be >= 2");
        }
        if (i > 0 && n_values[i] <= n_values[i - 1]) {
            throw std::invalid_argument("n values must be strictly increasing");
        }
    }
    if (!n_values.empty() && eval_points < 4 * n_values.back()) {
        throw std::invalid_argument("eval_points must be at least 4 * max(n) = " +
                                    std::to_string(4 * n_values.back()));
    }
    if (checkpoint_count < 2) {
        throw std::invalid_argument("need at least two checkpoints");
    }
    if (!(horizon > 0.0)) {
        throw std::invalid_argument("time horizon T must be positive");
    }
    if (stepper.kind == StepperConfig::Kind::rk54 && !(stepper.rtol > 0.0 && stepper.atol > 0.0)) {
        throw std::invalid_argument("rk54 needs positive rtol and atol");
    }
    if (stepper.kind == StepperConfig::Kind::euler && !(stepper.h_t > 0.0)) {
        throw std::invalid_argument("euler needs a positive step h_t");
    }
}

std::vector<double> eval_grid(const Interval& interval, std::size_t eval_points) {
    if (eval_points < 2) {
        throw std::invalid_argument("eval grid needs at least two points");
    }
    std::vector<double> xs(eval_points);
    const double denom = static_cast<double>(interval.periodic ? eval_points : eval_points - 1);
    for (std::size_t k = 0; k < eval_points; ++k) {
        xs[k] = interval.a + interval.length() * static_cast<double>(k) / denom;
    }
    if (!interval.periodic) {
        xs.back() = interval.b;
    }
    return xs;
}

double spatial_norm(std::span<const double> values, const Interval& interval, NormKind norm) {
    if (norm == NormKind::sup) {
        double m = 0.0;
        for (double v : values) m = std::max(m, std::abs(v));
        return m;
    }
    const std::size_t count = values.size();
    const double h = interval.length() / static_cast<double>(interval.periodic ? count : count - 1);
    double acc = 0.0;
    for (std::size_t k = 0; k < count; ++k) {
        const bool end = !interval.periodic && (k == 0 || k + 1 == count);
        acc += (end ? 0.5 : 1.0) * values[k] * values[k];
    }
    return std::sqrt(h * acc);
}

double error_CJX(const SemiDiscreteSystem& sys, const Trajectory& traj, const TestProblem& problem,
                 std::size_t eval_points) {
    const std::vector<double> xs = eval_grid(problem.interval, eval_points);
    std::vector<double> diff(xs.size());
    double worst = 0.0;
    for (std::size_t k = 0; k < traj.checkpoints.size(); ++k) {
        const double t = traj.checkpoints[k];
        sys.reconstruct_many(traj.states[k], xs, diff);
        for (std::size_t p = 0; p < xs.size(); ++p) diff[p] -= problem.exact(xs[p], t);
        worst = std::max(worst, spatial_norm(diff, problem.interval, sys.norm));
    }
    return worst;
}

double projector_error(const SemiDiscreteSystem& sys, const TestProblem& problem,
                       std::span<const double> checkpoints, std::size_t eval_points) {
    const std::vector<double> xs = eval_grid(problem.interval, eval_points);
    std::vector<double> diff(xs.size());
    double worst = 0.0;
    for (double t : checkpoints) {
        const auto state = sys.project([&](double x) { return problem.exact(x, t); });
        sys.reconstruct_many(state, xs, diff);
        for (std::size_t p = 0; p < xs.size(); ++p) diff[p] -= problem.exact(xs[p], t);
        worst = std::max(worst, spatial_norm(diff, problem.interval, sys.norm));
    }
    return worst;
}

double trajectory_distance(const SemiDiscreteSystem& sys, const Trajectory& a, const Trajectory& b,
                           std::size_t eval_points) {
    if (a.states.size() != b.states.size()) {
        throw std::invalid_argument("trajectory_distance: checkpoint counts differ");
    }
    const std::vector<double> xs = eval_grid(sys.interval, eval_points);
    std::vector<double> va(xs.size()), vb(xs.size());
    double worst = 0.0;
    for (std::size_t k = 0; k < a.states.size(); ++k) {
        sys.reconstruct_many(a.states[k], xs, va);
        sys.reconstruct_many(b.states[k], xs, vb);
        for (std::size_t p = 0; p < xs.size(); ++p) va[p] -= vb[p];
        worst = std::max(worst, spatial_norm(va, sys.interval, sys.norm));
    }
    return worst;
}

Trajectory integrate(const SemiDiscreteSystem& sys, double t0, double horizon,
                     const StepperConfig& stepper, std::span<const double> checkpoints) {
    if (stepper.kind == StepperConfig::Kind::euler) {
        return euler_integrate(sys, t0, horizon, stepper.h_t, checkpoints);
    }
    Rk54Options opts;
    opts.rtol = stepper.rtol;
    opts.atol = stepper.atol;
    return rk54_integrate(sys, t0, horizon, opts, checkpoints);
}

std::optional<double> observed_order(double e1, double e2, double n1, double n2) {
    if (!(e1 > 0.0 && e2 > 0.0)) {
        return std::nullopt;
    }
    return std::log(e1 / e2) / std::log(n2 / n1);
}

double fitted_order(std::span<const double> n, std::span<const double> errors) {
    if (n.size() != errors.size() || n.size() < 2) {
        throw std::invalid_argument("fitted_order needs at least two matching points");
    }
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    const double count = static_cast<double>(n.size());
    for (std::size_t i = 0; i < n.size(); ++i) {
        const double x = std::log(n[i]);
        const double y = std::log(errors[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double slope = (count * sxy - sx * sy) / (count * sxx - sx * sx);
    return -slope;
}

namespace {

// Distance between traj and a rerun at rtol/100, atol/100 whose steps are also
// clipped to a 4x finer checkpoint lattice. Without the finer lattice both runs
// take the same checkpoint-capped steps and the distance understates the error.
double temporal_floor(const SemiDiscreteSystem& sys, const Trajectory& traj, double t0,
                      double horizon, const StepperConfig& stepper, std::size_t checkpoint_count,
                      std::size_t eval_points) {
    constexpr std::size_t refine = 4;
    StepperConfig tight = stepper;
    tight.rtol /= 100.0;
    tight.atol /= 100.0;
    const std::size_t fine_count = (checkpoint_count - 1) * refine + 1;
    const std::vector<double> fine_cps = equispaced_checkpoints(t0, horizon, fine_count);
    Trajectory fine = integrate(sys, t0, horizon, tight, fine_cps);
    Trajectory sampled;
    for (std::size_t k = 0; k < fine.states.size(); k += refine) {
        sampled.checkpoints.push_back(fine.checkpoints[k]);
        sampled.states.push_back(std::move(fine.states[k]));
    }
    return trajectory_distance(sys, traj, sampled, eval_points);
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string context(const TestProblem& problem, const SchemeSpec& spec, std::size_t n) {
    return problem.name + " / " + to_string(spec.kind) + " (" + spec.variant_name() +
           "), n = " + std::to_string(n);
}

} // namespace

StudyResult run_study(const StudyConfig& cfg) {
    cfg.validate();
    StudyResult result;
    const std::vector<double> cps = equispaced_checkpoints(cfg.t0, cfg.horizon, cfg.checkpoint_count);
    SchemeOptions opts;
    opts.horizon = cfg.horizon;

    for (ProblemId id : cfg.problems) {
        const TestProblem problem = make_problem(id);
        const std::size_t first = result.records.size();
        for (std::size_t n : cfg.n_values) {
            const auto start = std::chrono::steady_clock::now();
            const SemiDiscreteSystem sys = build_scheme(problem, cfg.scheme, n, opts);
            Trajectory traj;
            try {
                traj = integrate(sys, cfg.t0, cfg.horizon, cfg.stepper, cps);
            } catch (const NumericalError& e) {
                throw NumericalError(context(problem, cfg.scheme, n) + ": " + e.what());
            }
            const double wall = seconds_since(start);
            ConvergenceRecord rec;
            rec.problem = problem.name;
            rec.scheme = to_string(cfg.scheme.kind);
            rec.variant = cfg.scheme.variant_name();
            rec.n = n;
            rec.h_x = sys.h_x;
            rec.error = error_CJX(sys, traj, problem, cfg.eval_points);
            rec.beta_n = sys.diagnostics.beta_n;
            rec.wall_time_s = wall;
            result.records.push_back(std::move(rec));
        }

        double floor = 0.0;
        if (cfg.estimate_floor && cfg.stepper.kind == StepperConfig::Kind::rk54 &&
            !cfg.n_values.empty()) {
            const std::size_t n = cfg.n_values.back();
            const SemiDiscreteSystem sys = build_scheme(problem, cfg.scheme, n, opts);
            const Trajectory coarse = integrate(sys, cfg.t0, cfg.horizon, cfg.stepper, cps);
            floor = temporal_floor(sys, coarse, cfg.t0, cfg.horizon, cfg.stepper,
                                   cfg.checkpoint_count, cfg.eval_points);
        }
        result.floors.push_back(floor);

        for (std::size_t r = first + 1; r < result.records.size(); ++r) {
            const auto& prev = result.records[r - 1];
            auto& cur = result.records[r];
            if (prev.error > 10.0 * floor && cur.error > 10.0 * floor) {
                cur.observed_order = observed_order(prev.error, cur.error, static_cast<double>(prev.n),
                                                    static_cast<double>(cur.n));
            }
        }
    }
    return result;
}

SandwichResult sandwich_check(const TestProblem& problem, const SchemeSpec& scheme, std::size_t n,
                              const StepperConfig& stepper, double t0, double horizon,
                              std::size_t eval_points, std::size_t checkpoint_count) {
    SchemeOptions opts;
    opts.horizon = horizon;
    const SemiDiscreteSystem sys = build_scheme(problem, scheme, n, opts);
    const std::vector<double> cps = equispaced_checkpoints(t0, horizon, checkpoint_count);
    const Trajectory traj = integrate(sys, t0, horizon, stepper, cps);

    SandwichResult r;
    r.scheme_error = error_CJX(sys, traj, problem, eval_points);
    r.projector_error = projector_error(sys, problem, cps, eval_points);
    r.beta_n = sys.diagnostics.beta_n;
    if (stepper.kind == StepperConfig::Kind::rk54) {
        r.temporal_floor =
            temporal_floor(sys, traj, t0, horizon, stepper, checkpoint_count, eval_points);
    }
    r.lower = 1.0 / (1.0 + r.beta_n);
    r.upper = std::exp(r.beta_n);
    r.ratio = r.projector_error > 0.0 ? r.scheme_error / r.projector_error : 0.0;
    constexpr double slack = 0.10;
    r.inconclusive = r.projector_error <= 10.0 * r.temporal_floor;
    r.pass = !r.inconclusive && r.ratio >= r.lower * (1.0 - slack) && r.ratio <= r.upper * (1.0 + slack);
    return r;
}

EulerSplitResult euler_split_study(const EulerSplitConfig& cfg) {
    if (cfg.h_values.empty() || cfg.spatial_n.size() < 2) {
        throw std::invalid_argument("euler split needs step sizes and at least two spatial n");
    }
    const TestProblem problem = make_problem(cfg.problem);
    SchemeOptions opts;
    opts.horizon = cfg.horizon;
    const std::vector<double> cps = equispaced_checkpoints(cfg.t0, cfg.horizon, cfg.checkpoint_count);

    std::vector<double> hs = cfg.h_values;
    std::sort(hs.begin(), hs.end(), std::greater<>());

    EulerSplitResult out;
    {
        const SemiDiscreteSystem sys = build_scheme(problem, cfg.scheme, cfg.n_fixed, opts);
        out.beta_n = sys.diagnostics.beta_n;
        const Trajectory ref =
            integrate(sys, cfg.t0, cfg.horizon, StepperConfig::rk54(1e-11, 1e-13), cps);
        out.spatial_floor = error_CJX(sys, ref, problem, cfg.eval_points);
        std::vector<double> inv_h, errs;
        for (double h : hs) {
            const auto start = std::chrono::steady_clock::now();
            const Trajectory traj = euler_integrate(sys, cfg.t0, cfg.horizon, h, cps);
            EulerSplitPoint p{cfg.n_fixed, h, trajectory_distance(sys, traj, ref, cfg.eval_points),
                              seconds_since(start)};
            out.temporal.push_back(p);
            inv_h.push_back(1.0 / h);
            errs.push_back(p.error);
        }
        if (!(out.spatial_floor < 0.1 * out.temporal.front().error)) {
            std::ostringstream msg;
            msg << "euler split: spatial error " << out.spatial_floor << " at n = " << cfg.n_fixed
                << " is not below 0.1 x the coarsest temporal error " << out.temporal.front().error
                << "; increase n";
            throw std::invalid_argument(msg.str());
        }
        out.temporal_order = hs.size() >= 2 ? fitted_order(inv_h, errs) : 0.0;
    }

    std::vector<double> ns, errs;
    for (std::size_t n : cfg.spatial_n) {
        const auto start = std::chrono::steady_clock::now();
        const SemiDiscreteSystem sys = build_scheme(problem, cfg.scheme, n, opts);
        const Trajectory traj = euler_integrate(sys, cfg.t0, cfg.horizon, cfg.spatial_h_t, cps);
        EulerSplitPoint p{n, cfg.spatial_h_t, error_CJX(sys, traj, problem, cfg.eval_points),
                          seconds_since(start)};
        out.spatial.push_back(p);
        ns.push_back(static_cast<double>(n));
        errs.push_back(p.error);
    }
    out.spatial_order = fitted_order(ns, errs);

    // Relative least squares: minimise sum ((a h + b hx^2) / e - 1)^2.
    double s11 = 0.0, s12 = 0.0, s22 = 0.0, r1 = 0.0, r2 = 0.0;
    for (std::size_t n : cfg.spatial_n) {
        const SemiDiscreteSystem sys = build_scheme(problem, cfg.scheme, n, opts);
        for (double h : hs) {
            const auto start = std::chrono::steady_clock::now();
            const Trajectory traj = euler_integrate(sys, cfg.t0, cfg.horizon, h, cps);
            EulerSplitPoint p{n, h, error_CJX(sys, traj, problem, cfg.eval_points), seconds_since(start)};
            out.grid.push_back(p);
            const double x1 = h / p.error;
            const double x2 = sys.h_x * sys.h_x / p.error;
            s11 += x1 * x1;
            s12 += x1 * x2;
            s22 += x2 * x2;
            r1 += x1;
            r2 += x2;
        }
    }
    const double det = s11 * s22 - s12 * s12;
    out.fit_a = (r1 * s22 - r2 * s12) / det;
    out.fit_b = (s11 * r2 - s12 * r1) / det;
    const double span = problem.interval.length();
    for (const auto& p : out.grid) {
        const double hx = span / static_cast<double>(p.n);
        const double fit = out.fit_a * p.h_t + out.fit_b * hx * hx;
        out.fit_max_rel_residual = std::max(out.fit_max_rel_residual, std::abs(fit - p.error) / p.error);
    }
    return out;
}

std::vector<ConvergenceRecord> euler_records(const EulerSplitConfig& cfg,
                                             const EulerSplitResult& result) {
    const std::string problem = to_string(cfg.problem);
    const std::string scheme = to_string(cfg.scheme.kind);
    const double span = make_problem(cfg.problem).interval.length();
    std::vector<ConvergenceRecord> out;
    auto add = [&](const std::string& tag, const EulerSplitPoint& p,
                   std::optional<double> order) {
        ConvergenceRecord r;
        r.problem = problem;
        r.scheme = scheme;
        char ht[32];
        std::snprintf(ht, sizeof ht, "%g", p.h_t);
        r.variant = tag + " ht=" + ht;
        r.n = p.n;
        r.h_x = span / static_cast<double>(p.n);
        r.error = p.error;
        r.observed_order = order;
        r.beta_n = result.beta_n;
        r.wall_time_s = p.wall_time_s;
        out.push_back(std::move(r));
    };
    for (std::size_t i = 0; i < result.temporal.size(); ++i) {
        std::optional<double> order;
        if (i > 0) {
            const auto& a = result.temporal[i - 1];
            const auto& b = result.temporal[i];
            order = observed_order(a.error, b.error, 1.0 / a.h_t, 1.0 / b.h_t);
        }
        add("euler-temporal", result.temporal[i], order);
    }
    for (std::size_t i = 0; i < result.spatial.size(); ++i) {
        std::optional<double> order;
        if (i > 0) {
            const auto& a = result.spatial[i - 1];
            const auto& b = result.spatial[i];
            order = observed_order(a.error, b.error, static_cast<double>(a.n), static_cast<double>(b.n));
        }
        add("euler-spatial", result.spatial[i], order);
    }
    for (const auto& p : result.grid) add("euler-grid", p, std::nullopt);
    return out;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_csv(const std::vector<ConvergenceRecord>& records, std::ostream& out) {
    out << kCsvHeader << '\n';
    for (const auto& r : records) {
        out << r.problem << ',' << r.scheme << ',' << r.variant << ',' << r.n << ','
            << format_double(r.h_x) << ',' << format_double(r.error) << ','
            << (r.observed_order ? format_double(*r.observed_order) : std::string{}) << ','
            << format_double(r.beta_n) << ',' << format_double(r.wall_time_s) << '\n';
    }
}

void emit_csv(const std::vector<ConvergenceRecord>& records, const std::string& path) {
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    write_csv(records, file);
    file.flush();
    if (!file) {
        throw IoError("failed writing '" + path + "'");
    }
}

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == sep) {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    fields.push_back(cur);
    return fields;
}

double parse_double(const std::string& s) {
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end == s.c_str() || *end != '\0') {
        throw std::invalid_argument("bad number '" + s + "' in CSV");
    }
    return v;
}

} // namespace

std::vector<ConvergenceRecord> read_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != kCsvHeader) {
        throw std::invalid_argument("CSV header mismatch");
    }
    std::vector<ConvergenceRecord> out;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto f = split(line, ',');
        if (f.size() != 9) {
            throw std::invalid_argument("CSV row with " + std::to_string(f.size()) + " fields");
        }
        ConvergenceRecord r;
        r.problem = f[0];
        r.scheme = f[1];
        r.variant = f[2];
        r.n = static_cast<std::size_t>(std::stoull(f[3]));
        r.h_x = parse_double(f[4]);
        r.error = parse_double(f[5]);
        if (!f[6].empty()) r.observed_order = parse_double(f[6]);
        r.beta_n = parse_double(f[7]);
        r.wall_time_s = parse_double(f[8]);
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace nf
