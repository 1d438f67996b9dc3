#include "nf/schemes.hpp"

#include "nf/quadrature.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <memory>
#include <numbers>
#include <stdexcept>

namespace nf {

namespace {

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

struct DenseMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    DenseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

    double& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

    // out = A x, or out += A x when accumulate is set.
    void apply(std::span<const double> x, std::span<double> out, bool accumulate = false) const {
        for (std::size_t i = 0; i < rows; ++i) {
            const double* row = &data[i * cols];
            double acc = 0.0;
            for (std::size_t j = 0; j < cols; ++j) {
                acc += row[j] * x[j];
            }
            out[i] = accumulate ? out[i] + acc : acc;
        }
    }

    double inf_norm() const {
        double best = 0.0;
        for (std::size_t i = 0; i < rows; ++i) {
            double s = 0.0;
            for (std::size_t j = 0; j < cols; ++j) s += std::abs((*this)(i, j));
            best = std::max(best, s);
        }
        return best;
    }
};

void require_nonperiodic(const TestProblem& problem, const char* scheme) {
    if (problem.periodic()) {
        throw std::invalid_argument(std::string(scheme) + " needs a non-periodic problem, got " +
                                    problem.name);
    }
}

void require_n(std::size_t n, std::size_t min, const char* scheme) {
    if (n < min) {
        throw std::invalid_argument(std::string(scheme) + " needs n >= " + std::to_string(min) +
                                    ", got " + std::to_string(n));
    }
}

SchemeDiagnostics make_diagnostics(double w_norm, const TestProblem& problem, NormKind norm,
                                   const SchemeOptions& opts) {
    SchemeDiagnostics d;
    d.discrete_W_infnorm = w_norm;
    d.horizon = opts.horizon;
    d.beta_n = opts.horizon * w_norm * problem.firing.derivative_sup_norm();
    const double kappa = norm == NormKind::sup ? 1.0 : std::sqrt(problem.interval.length());
    d.gamma_n = kappa * w_norm * problem.firing.sup_norm();
    return d;
}

// Piecewise-linear reconstruction shared by the finite-element schemes.
SemiDiscreteSystem::ReconstructFn tent_reconstruct(std::shared_ptr<const TentBasis> basis) {
    return [basis](std::span<const double> a, std::span<const double> xs, std::span<double> out) {
        for (std::size_t k = 0; k < xs.size(); ++k) {
            out[k] = piecewise_linear_interp(a, *basis, xs[k]);
        }
    };
}

SemiDiscreteSystem::ProjectFn nodal_projector(std::vector<double> nodes) {
    return [nodes = std::move(nodes)](const std::function<double(double)>& v) {
        std::vector<double> a(nodes.size());
        for (std::size_t i = 0; i < nodes.size(); ++i) a[i] = v(nodes[i]);
        return a;
    };
}

} // namespace

std::string to_string(SchemeKind kind) {
    switch (kind) {
    case SchemeKind::fe_collocation: return "fe-collocation";
    case SchemeKind::cheb_collocation: return "cheb-collocation";
    case SchemeKind::fe_galerkin: return "fe-galerkin";
    case SchemeKind::spectral_galerkin: return "spectral-galerkin";
    }
    return "unknown";
}

SchemeKind parse_scheme_kind(std::string_view token) {
    const std::string t = lower(token);
    for (auto k : {SchemeKind::fe_collocation, SchemeKind::cheb_collocation,
                   SchemeKind::fe_galerkin, SchemeKind::spectral_galerkin}) {
        if (to_string(k) == t) return k;
    }
    throw std::invalid_argument("unknown scheme '" + std::string(token) + "'");
}

ChebQuadrature parse_cheb_quadrature(std::string_view token) {
    const std::string t = lower(token);
    if (t == "trapezium") return ChebQuadrature::trapezium;
    if (t == "cc" || t == "clenshaw-curtis") return ChebQuadrature::clenshaw_curtis;
    throw std::invalid_argument("unknown quadrature '" + std::string(token) +
                                "' (expected trapezium or cc)");
}

FeGalerkinVariant parse_fe_variant(std::string_view token) {
    const std::string t = lower(token);
    if (t == "lumped") return FeGalerkinVariant::lumped;
    if (t == "gauss2") return FeGalerkinVariant::gauss2;
    throw std::invalid_argument("unknown variant '" + std::string(token) +
                                "' (expected lumped or gauss2)");
}

std::string SchemeSpec::variant_name() const {
    switch (kind) {
    case SchemeKind::cheb_collocation:
        return cheb_quadrature == ChebQuadrature::trapezium ? "trapezium" : "cc";
    case SchemeKind::fe_galerkin: return fe_variant == FeGalerkinVariant::lumped ? "lumped" : "gauss2";
    case SchemeKind::fe_collocation: return "trapezium";
    case SchemeKind::spectral_galerkin: return "trapezium";
    }
    return "-";
}

double SemiDiscreteSystem::reconstruct(std::span<const double> a, double x) const {
    double out = 0.0;
    reconstruct_many(a, std::span<const double>(&x, 1), std::span<double>(&out, 1));
    return out;
}

std::vector<double> rhs_eval(const SemiDiscreteSystem& sys, double t, std::span<const double> a) {
    if (a.size() != sys.dim) {
        throw std::invalid_argument("rhs_eval: state length " + std::to_string(a.size()) +
                                    " does not match system dimension " + std::to_string(sys.dim));
    }
    std::vector<double> out(sys.dim);
    sys.rhs(t, a, out);
    return out;
}

std::vector<double> reconstruct_on(const SemiDiscreteSystem& sys, std::span<const double> a,
                                   std::span<const double> xs) {
    if (a.size() != sys.dim) {
        throw std::invalid_argument("reconstruct_on: state length " + std::to_string(a.size()) +
                                    " does not match system dimension " + std::to_string(sys.dim));
    }
    std::vector<double> out(xs.size());
    sys.reconstruct_many(a, xs, out);
    return out;
}

TridiagonalSolver::TridiagonalSolver(std::vector<double> diag, std::vector<double> off)
    : off_(std::move(off)) {
    const std::size_t n = diag.size();
    if (off_.size() + 1 != n) {
        throw std::invalid_argument("TridiagonalSolver: off-diagonal must have n-1 entries");
    }
    c_prime_.assign(n, 0.0);
    inv_denom_.assign(n, 0.0);
    double denom = diag[0];
    inv_denom_[0] = 1.0 / denom;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        c_prime_[i] = off_[i] * inv_denom_[i];
        denom = diag[i + 1] - off_[i] * c_prime_[i];
        inv_denom_[i + 1] = 1.0 / denom;
    }
}

void TridiagonalSolver::solve(std::span<double> d) const {
    const std::size_t n = inv_denom_.size();
    d[0] *= inv_denom_[0];
    for (std::size_t i = 1; i < n; ++i) {
        d[i] = (d[i] - off_[i - 1] * d[i - 1]) * inv_denom_[i];
    }
    for (std::size_t i = n - 1; i-- > 0;) {
        d[i] -= c_prime_[i] * d[i + 1];
    }
}

std::pair<std::vector<double>, std::vector<double>> fe_mass_matrix(const UniformGrid& grid) {
    const std::size_t n = grid.elements();
    const double h = grid.spacing();
    std::vector<double> diag(n + 1, 2.0 * h / 3.0);
    diag.front() = h / 3.0;
    diag.back() = h / 3.0;
    std::vector<double> off(n, h / 6.0);
    return {std::move(diag), std::move(off)};
}

// ---------------------------------------------------------------------------
// Finite-element collocation with composite trapezium quadrature.

SemiDiscreteSystem build_fe_collocation(const TestProblem& problem, std::size_t n,
                                        const SchemeOptions& opts) {
    require_nonperiodic(problem, "fe-collocation");
    require_n(n, 2, "fe-collocation");

    auto basis = std::make_shared<const TentBasis>(UniformGrid(problem.interval, n));
    const auto& nodes = basis->grid().nodes();
    const QuadratureRule rule = trapezium_rule(problem.interval, n);

    auto W = std::make_shared<DenseMatrix>(n + 1, n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        for (std::size_t j = 0; j <= n; ++j) {
            (*W)(i, j) = problem.kernel(nodes[i], nodes[j]) * rule.weights[j];
        }
    }

    SemiDiscreteSystem sys;
    sys.dim = n + 1;
    sys.spec.kind = SchemeKind::fe_collocation;
    sys.label = "fe-collocation";
    sys.norm = NormKind::sup;
    sys.interval = problem.interval;
    sys.n = n;
    sys.h_x = basis->grid().spacing();
    sys.diagnostics = make_diagnostics(W->inf_norm(), problem, sys.norm, opts);

    sys.rhs = [W, nodes, firing = problem.firing, forcing = problem.forcing](
                  double t, std::span<const double> a, std::span<double> out) {
        std::vector<double> fa(a.size());
        for (std::size_t j = 0; j < a.size(); ++j) fa[j] = firing.eval(a[j]);
        W->apply(fa, out);
        for (std::size_t i = 0; i < a.size(); ++i) {
            out[i] = -a[i] + out[i] + forcing(nodes[i], t);
        }
    };
    sys.project = nodal_projector(nodes);
    sys.initial = sys.project(problem.initial);
    sys.reconstruct_many = tent_reconstruct(basis);
    return sys;
}

// ---------------------------------------------------------------------------
// Chebyshev spectral collocation, trapezium or Clenshaw-Curtis quadrature.

SemiDiscreteSystem build_cheb_collocation(const TestProblem& problem, std::size_t n,
                                          ChebQuadrature quad, std::size_t trapezium_elements,
                                          const SchemeOptions& opts) {
    require_nonperiodic(problem, "cheb-collocation");
    require_n(n, 2, "cheb-collocation");

    auto basis = std::make_shared<const ChebyshevBasis>(ChebyshevGrid(n));
    const double a0 = problem.interval.a;
    const double half = 0.5 * problem.interval.length();
    auto to_ref = [a0, half](double x) { return (x - a0) / half - 1.0; };
    auto from_ref = [a0, half](double s) { return a0 + half * (s + 1.0); };

    std::vector<double> nodes(n + 1);
    for (std::size_t i = 0; i <= n; ++i) nodes[i] = from_ref(basis->grid()[i]);
    nodes.front() = problem.interval.b;
    nodes.back() = problem.interval.a;

    SemiDiscreteSystem sys;
    sys.dim = n + 1;
    sys.spec.kind = SchemeKind::cheb_collocation;
    sys.spec.cheb_quadrature = quad;
    sys.label = "cheb-collocation";
    sys.norm = NormKind::sup;
    sys.interval = problem.interval;
    sys.n = n;
    sys.h_x = problem.interval.length() / static_cast<double>(n);

    const auto firing = problem.firing;
    const auto forcing = problem.forcing;

    if (quad == ChebQuadrature::clenshaw_curtis) {
        const QuadratureRule cc = clenshaw_curtis(n);
        auto W = std::make_shared<DenseMatrix>(n + 1, n + 1);
        for (std::size_t i = 0; i <= n; ++i) {
            for (std::size_t j = 0; j <= n; ++j) {
                (*W)(i, j) = problem.kernel(nodes[i], nodes[j]) * cc.weights[j] * half;
            }
        }
        sys.diagnostics = make_diagnostics(W->inf_norm(), problem, sys.norm, opts);
        sys.rhs = [W, nodes, firing, forcing](double t, std::span<const double> a,
                                              std::span<double> out) {
            std::vector<double> fa(a.size());
            for (std::size_t j = 0; j < a.size(); ++j) fa[j] = firing.eval(a[j]);
            W->apply(fa, out);
            for (std::size_t i = 0; i < a.size(); ++i) {
                out[i] = -a[i] + out[i] + forcing(nodes[i], t);
            }
        };
    } else {
        const std::size_t m = trapezium_elements == 0 ? n : trapezium_elements;
        sys.spec.cheb_trapezium_elements = m;
        const QuadratureRule rule = trapezium_rule(problem.interval, m);
        auto W = std::make_shared<DenseMatrix>(n + 1, m + 1);
        for (std::size_t i = 0; i <= n; ++i) {
            for (std::size_t j = 0; j <= m; ++j) {
                (*W)(i, j) = problem.kernel(nodes[i], rule.nodes[j]) * rule.weights[j];
            }
        }
        // Interpolation matrix from nodal values to the quadrature nodes.
        auto B = std::make_shared<DenseMatrix>(m + 1, n + 1);
        for (std::size_t j = 0; j <= m; ++j) {
            basis->lagrange_row(to_ref(rule.nodes[j]),
                                std::span<double>(&(*B)(j, 0), n + 1));
        }
        sys.diagnostics = make_diagnostics(W->inf_norm(), problem, sys.norm, opts);
        sys.rhs = [W, B, nodes, firing, forcing, m](double t, std::span<const double> a,
                                                    std::span<double> out) {
            std::vector<double> uz(m + 1);
            B->apply(a, uz);
            for (double& v : uz) v = firing.eval(v);
            W->apply(uz, out);
            for (std::size_t i = 0; i < a.size(); ++i) {
                out[i] = -a[i] + out[i] + forcing(nodes[i], t);
            }
        };
    }

    sys.project = nodal_projector(nodes);
    sys.initial = sys.project(problem.initial);
    sys.reconstruct_many = [basis, to_ref](std::span<const double> a, std::span<const double> xs,
                                           std::span<double> out) {
        for (std::size_t k = 0; k < xs.size(); ++k) {
            out[k] = barycentric_interp(a, *basis, to_ref(xs[k]));
        }
    };
    return sys;
}

// ---------------------------------------------------------------------------
// Finite-element Galerkin: mass-lumped trapezium or exact mass with Gauss-2.

SemiDiscreteSystem build_fe_galerkin(const TestProblem& problem, std::size_t n,
                                     FeGalerkinVariant variant, const SchemeOptions& opts) {
    require_nonperiodic(problem, "fe-galerkin");
    require_n(n, 2, "fe-galerkin");

    auto basis = std::make_shared<const TentBasis>(UniformGrid(problem.interval, n));
    const auto& nodes = basis->grid().nodes();
    const double h = basis->grid().spacing();

    SemiDiscreteSystem sys;
    sys.dim = n + 1;
    sys.spec.kind = SchemeKind::fe_galerkin;
    sys.spec.fe_variant = variant;
    sys.label = "fe-galerkin";
    sys.norm = NormKind::l2;
    sys.interval = problem.interval;
    sys.n = n;
    sys.h_x = h;
    sys.reconstruct_many = tent_reconstruct(basis);

    const auto firing = problem.firing;
    const auto forcing = problem.forcing;

    if (variant == FeGalerkinVariant::lumped) {
        const QuadratureRule rule = trapezium_rule(problem.interval, n);
        auto W = std::make_shared<DenseMatrix>(n + 1, n + 1);
        for (std::size_t i = 0; i <= n; ++i) {
            for (std::size_t j = 0; j <= n; ++j) {
                (*W)(i, j) = problem.kernel(nodes[i], nodes[j]) * rule.weights[j];
            }
        }
        sys.diagnostics = make_diagnostics(W->inf_norm(), problem, sys.norm, opts);
        // rho_i a_i' = -rho_i a_i + rho_i (W f(a))_i + rho_i xi_i, divided through by rho_i.
        sys.rhs = [W, nodes, rho = rule.weights, firing, forcing](
                      double t, std::span<const double> a, std::span<double> out) {
            std::vector<double> fa(a.size());
            for (std::size_t j = 0; j < a.size(); ++j) fa[j] = firing.eval(a[j]);
            W->apply(fa, out);
            for (std::size_t i = 0; i < a.size(); ++i) {
                const double load = rho[i] * out[i] + rho[i] * forcing(nodes[i], t);
                out[i] = -a[i] + load / rho[i];
            }
        };
        sys.project = nodal_projector(nodes);
        sys.initial = sys.project(problem.initial);
        return sys;
    }

    // Gauss points g_e(z_q) = x_e + (1 + z_q) h / 2, two per element, element-major.
    const QuadratureRule gauss = gauss_legendre_2();
    const std::size_t nq = gauss.size();
    const std::size_t np = n * nq;
    std::vector<double> points(np);
    std::vector<double> phi_minus(nq), phi_plus(nq);
    for (std::size_t q = 0; q < nq; ++q) {
        phi_minus[q] = 0.5 * (1.0 - gauss.nodes[q]);
        phi_plus[q] = 0.5 * (1.0 + gauss.nodes[q]);
    }
    for (std::size_t e = 0; e < n; ++e) {
        for (std::size_t q = 0; q < nq; ++q) {
            points[e * nq + q] = nodes[e] + (1.0 + gauss.nodes[q]) * 0.5 * h;
        }
    }
    auto K = std::make_shared<DenseMatrix>(np, np);
    for (std::size_t p = 0; p < np; ++p) {
        for (std::size_t r = 0; r < np; ++r) {
            (*K)(p, r) = problem.kernel(points[p], points[r]) * 0.5 * h * gauss.weights[r % nq];
        }
    }
    sys.diagnostics = make_diagnostics(K->inf_norm(), problem, sys.norm, opts);

    auto [diag, off] = fe_mass_matrix(basis->grid());
    auto mass = std::make_shared<const TridiagonalSolver>(std::move(diag), std::move(off));

    // Load vector L_i = int l_i v dx by element-wise Gauss-2, from values of v at the Gauss points.
    auto assemble_load = [n, nq, h, phi_minus, phi_plus, nu = gauss.weights](
                             std::span<const double> v, std::span<double> load) {
        std::fill(load.begin(), load.end(), 0.0);
        for (std::size_t e = 0; e < n; ++e) {
            for (std::size_t q = 0; q < nq; ++q) {
                const double s = 0.5 * h * nu[q] * v[e * nq + q];
                load[e] += phi_minus[q] * s;
                load[e + 1] += phi_plus[q] * s;
            }
        }
    };

    sys.rhs = [K, mass, points, phi_minus, phi_plus, nq, n, firing, forcing, assemble_load](
                  double t, std::span<const double> a, std::span<double> out) {
        const std::size_t np = points.size();
        std::vector<double> fu(np);
        for (std::size_t e = 0; e < n; ++e) {
            for (std::size_t q = 0; q < nq; ++q) {
                fu[e * nq + q] = firing.eval(a[e] * phi_minus[q] + a[e + 1] * phi_plus[q]);
            }
        }
        std::vector<double> v(np);
        K->apply(fu, v);
        for (std::size_t p = 0; p < np; ++p) v[p] += forcing(points[p], t);
        assemble_load(v, out);
        // M a' = -M a + L  <=>  a' = -a + M^{-1} L
        mass->solve(out);
        for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i] + out[i];
    };
    sys.project = [mass, points, assemble_load, n](const std::function<double(double)>& u) {
        std::vector<double> v(points.size());
        for (std::size_t p = 0; p < points.size(); ++p) v[p] = u(points[p]);
        std::vector<double> a(n + 1);
        assemble_load(v, a);
        mass->solve(a);
        return a;
    };
    sys.initial = sys.project(problem.initial);
    return sys;
}

// ---------------------------------------------------------------------------
// Spectral Galerkin on the ring with pseudospectral right-hand side.

SemiDiscreteSystem build_spectral_galerkin(const TestProblem& problem, std::size_t n,
                                           const SchemeOptions& opts) {
    if (!problem.periodic()) {
        throw std::invalid_argument("spectral-galerkin needs a periodic problem, got " +
                                    problem.name);
    }
    require_n(n, 1, "spectral-galerkin");

    const FourierBasis basis(n);
    const std::size_t m = basis.size();
    const double scale = problem.interval.length() / (2.0 * std::numbers::pi);
    std::vector<double> xs = basis.sample_points();
    for (double& x : xs) x = problem.interval.a + scale * x;
    const double hx = problem.interval.length() / static_cast<double>(m);

    auto W = std::make_shared<DenseMatrix>(m, m);
    for (std::size_t l = 0; l < m; ++l) {
        for (std::size_t j = 0; j < m; ++j) {
            (*W)(l, j) = hx * problem.kernel(xs[l], xs[j]);
        }
    }

    SemiDiscreteSystem sys;
    sys.dim = 2 * m;
    sys.spec.kind = SchemeKind::spectral_galerkin;
    sys.label = "spectral-galerkin";
    sys.norm = NormKind::l2;
    sys.interval = problem.interval;
    sys.n = n;
    sys.h_x = hx;
    sys.diagnostics = make_diagnostics(W->inf_norm(), problem, sys.norm, opts);

    const DftBackend backend = opts.dft;
    const auto firing = problem.firing;
    const auto forcing = problem.forcing;

    auto to_complex = [m](std::span<const double> a) {
        std::vector<Complex> c(m);
        for (std::size_t j = 0; j < m; ++j) c[j] = Complex(a[2 * j], a[2 * j + 1]);
        return c;
    };

    sys.rhs = [W, xs, m, backend, firing, forcing, to_complex](double t, std::span<const double> a,
                                                                std::span<double> out) {
        const std::vector<Complex> samples = dft_backward(to_complex(a), backend);
        std::vector<double> fu(m);
        for (std::size_t l = 0; l < m; ++l) fu[l] = firing.eval(samples[l].real());
        std::vector<double> v(m);
        W->apply(fu, v);
        std::vector<Complex> vc(m);
        for (std::size_t l = 0; l < m; ++l) vc[l] = Complex(v[l] + forcing(xs[l], t), 0.0);
        const std::vector<Complex> c = dft_forward(vc, backend);
        for (std::size_t j = 0; j < m; ++j) {
            out[2 * j] = -a[2 * j] + c[j].real();
            out[2 * j + 1] = -a[2 * j + 1] + c[j].imag();
        }
    };

    auto pack = [](const std::vector<Complex>& c) {
        std::vector<double> a(2 * c.size());
        for (std::size_t j = 0; j < c.size(); ++j) {
            a[2 * j] = c[j].real();
            a[2 * j + 1] = c[j].imag();
        }
        return a;
    };

    {
        std::vector<Complex> u0(m);
        for (std::size_t l = 0; l < m; ++l) u0[l] = Complex(problem.initial(xs[l]), 0.0);
        sys.initial = pack(dft_forward(u0, backend));
    }

    // Orthogonal projection: Fourier coefficients from an oversampled transform, truncated to |j| <= n.
    const double a0 = problem.interval.a;
    sys.project = [n, m, a0, scale, pack](const std::function<double(double)>& u) {
        const std::size_t big_n = std::max<std::size_t>(8 * n, 1024);
        const std::size_t big_m = 2 * big_n + 1;
        std::vector<Complex> samples(big_m);
        for (std::size_t l = 0; l < big_m; ++l) {
            const double x = 2.0 * std::numbers::pi * static_cast<double>(l) / static_cast<double>(big_m);
            samples[l] = Complex(u(a0 + scale * x), 0.0);
        }
        const std::vector<Complex> all = dft_forward(samples);
        std::vector<Complex> c(m);
        for (std::size_t j = 0; j < m; ++j) c[j] = all[big_n - n + j];
        return pack(c);
    };

    sys.reconstruct_many = [m, a0, scale, to_complex](std::span<const double> a,
                                                      std::span<const double> pts,
                                                      std::span<double> out) {
        const std::vector<Complex> c = to_complex(a);
        for (std::size_t k = 0; k < pts.size(); ++k) {
            out[k] = fourier_reconstruct(c, (pts[k] - a0) / scale);
        }
    };
    return sys;
}

SemiDiscreteSystem make_ode_system(std::vector<double> initial, SemiDiscreteSystem::RhsFn rhs) {
    SemiDiscreteSystem sys;
    sys.dim = initial.size();
    sys.initial = std::move(initial);
    sys.rhs = std::move(rhs);
    sys.label = "ode";
    sys.reconstruct_many = [](std::span<const double> a, std::span<const double> xs,
                              std::span<double> out) {
        for (std::size_t k = 0; k < xs.size(); ++k) out[k] = a[0];
    };
    sys.project = [dim = sys.dim](const std::function<double(double)>& v) {
        return std::vector<double>(dim, v(0.0));
    };
    return sys;
}

SemiDiscreteSystem build_scheme(const TestProblem& problem, const SchemeSpec& spec, std::size_t n,
                                const SchemeOptions& opts) {
    switch (spec.kind) {
    case SchemeKind::fe_collocation: return build_fe_collocation(problem, n, opts);
    case SchemeKind::cheb_collocation:
        return build_cheb_collocation(problem, n, spec.cheb_quadrature, spec.cheb_trapezium_elements,
                                      opts);
    case SchemeKind::fe_galerkin: return build_fe_galerkin(problem, n, spec.fe_variant, opts);
    case SchemeKind::spectral_galerkin: return build_spectral_galerkin(problem, n, opts);
    }
    throw std::invalid_argument("unknown scheme kind");
}

} // namespace nf
