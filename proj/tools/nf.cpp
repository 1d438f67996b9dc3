// nf: command-line driver for neural field projection-scheme studies.
#include "nf/harness.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <sstream>

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitNumerical = 2;
constexpr int kExitIo = 3;

struct SchemeFlags {
    std::string scheme = "fe-collocation";
    std::string quadrature = "cc";
    std::string variant = "gauss2";
    std::size_t trapezium_elements = 0;

    nf::SchemeSpec spec() const {
        nf::SchemeSpec s;
        s.kind = nf::parse_scheme_kind(scheme);
        s.cheb_quadrature = nf::parse_cheb_quadrature(quadrature);
        s.cheb_trapezium_elements = trapezium_elements;
        s.fe_variant = nf::parse_fe_variant(variant);
        return s;
    }
};

struct TimeFlags {
    double t0 = 0.0;
    double horizon = 1.0;
    std::string stepper = "rk54";
    double rtol = 1e-6;
    double atol = 1e-9;
    double h_t = 1e-3;
    std::size_t eval_points = 2048;
    std::size_t checkpoints = 51;
    long seed = 0;

    nf::StepperConfig stepper_config() const {
        if (stepper == "rk54") return nf::StepperConfig::rk54(rtol, atol);
        if (stepper == "euler") return nf::StepperConfig::euler(h_t);
        throw std::invalid_argument("unknown stepper '" + stepper + "' (expected rk54 or euler)");
    }
};

void add_scheme_flags(CLI::App* cmd, SchemeFlags& f) {
    cmd->add_option("--scheme", f.scheme,
                    "fe-collocation | cheb-collocation | fe-galerkin | spectral-galerkin");
    cmd->add_option("--quadrature", f.quadrature, "trapezium | cc (cheb-collocation)");
    cmd->add_option("--variant", f.variant, "lumped | gauss2 (fe-galerkin)");
    cmd->add_option("--trapezium-elements", f.trapezium_elements,
                    "quadrature elements for cheb-collocation/trapezium (0 = n)");
}

void add_time_flags(CLI::App* cmd, TimeFlags& f) {
    cmd->add_option("--t0", f.t0, "initial time");
    cmd->add_option("--T", f.horizon, "length of the time window");
    cmd->add_option("--stepper", f.stepper, "rk54 | euler");
    cmd->add_option("--rtol", f.rtol, "rk54 relative tolerance");
    cmd->add_option("--atol", f.atol, "rk54 absolute tolerance");
    cmd->add_option("--ht", f.h_t, "euler step size");
    cmd->add_option("--eval-points", f.eval_points, "spatial evaluation grid size");
    cmd->add_option("--checkpoints", f.checkpoints, "equispaced checkpoints in time");
    cmd->add_option("--seed", f.seed, "reserved; all runs are deterministic");
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

template <class T>
std::vector<T> parse_list(const std::string& s) {
    std::vector<T> out;
    for (const auto& item : split_list(s)) {
        std::size_t pos = 0;
        if constexpr (std::is_same_v<T, double>) {
            out.push_back(std::stod(item, &pos));
        } else {
            out.push_back(static_cast<T>(std::stoull(item, &pos)));
        }
        if (pos != item.size()) throw std::invalid_argument("bad list entry '" + item + "'");
    }
    return out;
}

void print_records(const std::vector<nf::ConvergenceRecord>& records) {
    std::printf("%-6s %-18s %-28s %6s %12s %10s %9s\n", "prob", "scheme", "variant", "n", "error",
                "order", "wall[s]");
    for (const auto& r : records) {
        std::printf("%-6s %-18s %-28s %6zu %12.4e %10s %9.3f\n", r.problem.c_str(), r.scheme.c_str(),
                    r.variant.c_str(), r.n, r.error,
                    r.observed_order ? std::to_string(*r.observed_order).substr(0, 6).c_str() : "-",
                    r.wall_time_s);
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Projection schemes for neural field equations"};
    app.require_subcommand(1);

    SchemeFlags scheme;
    TimeFlags time;
    std::string out_path;

    auto* run = app.add_subcommand("run", "single problem, single n");
    std::string run_problem = "P1";
    std::size_t run_n = 64;
    run->add_option("--problem", run_problem, "P1..P6, P7p..P10p")->required();
    run->add_option("--n", run_n, "discretisation size")->required();
    run->add_option("--out", out_path, "CSV output path");
    add_scheme_flags(run, scheme);
    add_time_flags(run, time);

    auto* converge = app.add_subcommand("converge", "convergence study over several n");
    std::string conv_problems, conv_n;
    bool no_floor = false;
    converge->add_option("--problems", conv_problems, "comma-separated problem ids")->required();
    converge->add_option("--n", conv_n, "comma-separated increasing n values")->required();
    converge->add_option("--out", out_path, "CSV output path");
    converge->add_flag("--no-floor", no_floor, "skip the temporal floor estimate");
    add_scheme_flags(converge, scheme);
    add_time_flags(converge, time);

    auto* euler = app.add_subcommand("euler", "forward Euler temporal/spatial error split");
    std::string euler_problem = "P1";
    std::size_t euler_n = 512;
    std::string euler_ht = "0.02,0.01,0.005,0.0025";
    std::string euler_spatial_n = "8,16,32,64";
    double euler_spatial_ht = 1e-4;
    euler->add_option("--problem", euler_problem, "problem id");
    euler->add_option("--n", euler_n, "fixed n for the temporal sweep");
    euler->add_option("--ht", euler_ht, "comma-separated step sizes");
    euler->add_option("--spatial-n", euler_spatial_n, "n values for the spatial sweep");
    euler->add_option("--spatial-ht", euler_spatial_ht, "step size for the spatial sweep");
    euler->add_option("--out", out_path, "CSV output path");
    euler->add_option("--T", time.horizon, "length of the time window");
    euler->add_option("--eval-points", time.eval_points, "spatial evaluation grid size");
    euler->add_option("--checkpoints", time.checkpoints, "equispaced checkpoints in time");

    auto* check = app.add_subcommand("check", "run property suites");
    std::string suite = "units";
    check->add_option("--suite", suite,
                      "quadrature | projection | timestep | units | residual | sandwich");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*run || *converge) {
            nf::StudyConfig cfg;
            cfg.scheme = scheme.spec();
            cfg.t0 = time.t0;
            cfg.horizon = time.horizon;
            cfg.stepper = time.stepper_config();
            cfg.eval_points = time.eval_points;
            cfg.checkpoint_count = time.checkpoints;
            if (*run) {
                cfg.problems = {nf::parse_problem_id(run_problem)};
                cfg.n_values = {run_n};
                cfg.estimate_floor = false;
            } else {
                for (const auto& p : split_list(conv_problems)) cfg.problems.push_back(nf::parse_problem_id(p));
                cfg.n_values = parse_list<std::size_t>(conv_n);
                cfg.estimate_floor = !no_floor;
            }
            const nf::StudyResult result = nf::run_study(cfg);
            print_records(result.records);
            for (std::size_t i = 0; i < result.floors.size() && *converge; ++i) {
                std::printf("temporal floor %s: %.3e\n", nf::to_string(cfg.problems[i]).c_str(),
                            result.floors[i]);
            }
            if (!out_path.empty()) nf::emit_csv(result.records, out_path);
        } else if (*euler) {
            nf::EulerSplitConfig cfg;
            cfg.problem = nf::parse_problem_id(euler_problem);
            cfg.n_fixed = euler_n;
            cfg.h_values = parse_list<double>(euler_ht);
            cfg.spatial_n = parse_list<std::size_t>(euler_spatial_n);
            cfg.spatial_h_t = euler_spatial_ht;
            cfg.horizon = time.horizon;
            cfg.eval_points = time.eval_points;
            cfg.checkpoint_count = time.checkpoints;
            const auto result = nf::euler_split_study(cfg);
            const auto records = nf::euler_records(cfg, result);
            print_records(records);
            std::printf("temporal order %.4f  spatial order %.4f  fit a=%.4e b=%.4e  max rel residual %.3f\n",
                        result.temporal_order, result.spatial_order, result.fit_a, result.fit_b,
                        result.fit_max_rel_residual);
            if (!out_path.empty()) nf::emit_csv(records, out_path);
        } else if (*check) {
            const auto outcomes = nf::run_check_suite(suite);
            bool ok = true;
            for (const auto& o : outcomes) {
                std::printf("[%s] %s%s%s\n", o.pass ? "PASS" : "FAIL", o.name.c_str(),
                            o.detail.empty() ? "" : "  ", o.detail.c_str());
                ok &= o.pass;
            }
            return ok ? 0 : kExitNumerical;
        }
    } catch (const nf::IoError& e) {
        std::cerr << "nf: " << e.what() << '\n';
        return kExitIo;
    } catch (const nf::NumericalError& e) {
        std::cerr << "nf: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const std::invalid_argument& e) {
        std::cerr << "nf: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "nf: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "nf: " << e.what() << '\n';
        return kExitNumerical;
    }
    return 0;
}
