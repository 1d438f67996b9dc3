#pragma once

#include "nf/model.hpp"
#include "nf/problems.hpp"
#include "nf/projection.hpp"

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace nf {

enum class SchemeKind { fe_collocation, cheb_collocation, fe_galerkin, spectral_galerkin };
enum class ChebQuadrature { trapezium, clenshaw_curtis };
enum class FeGalerkinVariant { lumped, gauss2 };
/// Spatial norm of the scheme's ambient space: C(Omega) or L^2(Omega).
enum class NormKind { sup, l2 };

std::string to_string(SchemeKind kind);
SchemeKind parse_scheme_kind(std::string_view token);
ChebQuadrature parse_cheb_quadrature(std::string_view token);
FeGalerkinVariant parse_fe_variant(std::string_view token);

/// Which discretisation to build, with its quadrature or variant selector.
struct SchemeSpec {
    SchemeKind kind = SchemeKind::fe_collocation;
    ChebQuadrature cheb_quadrature = ChebQuadrature::clenshaw_curtis;
    /// Elements of the evenly spaced quadrature in the Chebyshev/trapezium
    /// scheme; 0 means "same as n".
    std::size_t cheb_trapezium_elements = 0;
    FeGalerkinVariant fe_variant = FeGalerkinVariant::gauss2;

    /// "cc", "lumped", "gauss2", or "trapezium" (also reported by the schemes
    /// whose quadrature is fixed).
    std::string variant_name() const;
};

struct SchemeOptions {
    /// Length T of the time window; enters beta_n only.
    double horizon = 1.0;
    DftBackend dft = DftBackend::fft;
};

/// Computable stand-ins for the operator-norm constants of the convergence theory.
struct SchemeDiagnostics {
    /// Max absolute row sum of the assembled weight matrix.
    double discrete_W_infnorm = 0.0;
    /// horizon * discrete_W_infnorm * sup|f'|
    double beta_n = 0.0;
    /// kappa * discrete_W_infnorm * sup|f|, kappa = 1 (sup) or |Omega|^{1/2} (L^2)
    double gamma_n = 0.0;
    double horizon = 1.0;
};

/// The ODE system a' = rhs(t, a) produced by a projection scheme, together
/// with the maps between state vectors and functions on the domain.
struct SemiDiscreteSystem {
    using RhsFn = std::function<void(double, std::span<const double>, std::span<double>)>;
    using ReconstructFn =
        std::function<void(std::span<const double>, std::span<const double>, std::span<double>)>;
    using ProjectFn = std::function<std::vector<double>(const std::function<double(double)>&)>;

    std::size_t dim = 0;
    RhsFn rhs;
    std::vector<double> initial;
    /// (state, points, values): evaluate the function represented by state.
    ReconstructFn reconstruct_many;
    /// State of P_n v for a function v on the domain.
    ProjectFn project;

    std::string label;
    SchemeSpec spec;
    NormKind norm = NormKind::sup;
    Interval interval;
    std::size_t n = 0;
    double h_x = 0.0;
    SchemeDiagnostics diagnostics;

    double reconstruct(std::span<const double> a, double x) const;
};

SemiDiscreteSystem build_fe_collocation(const TestProblem& problem, std::size_t n,
                                        const SchemeOptions& opts = {});
SemiDiscreteSystem build_cheb_collocation(const TestProblem& problem, std::size_t n,
                                          ChebQuadrature quad, std::size_t trapezium_elements = 0,
                                          const SchemeOptions& opts = {});
SemiDiscreteSystem build_fe_galerkin(const TestProblem& problem, std::size_t n,
                                     FeGalerkinVariant variant, const SchemeOptions& opts = {});
/// State is the 2n+1 complex coefficients stored as interleaved (re, im).
SemiDiscreteSystem build_spectral_galerkin(const TestProblem& problem, std::size_t n,
                                           const SchemeOptions& opts = {});

SemiDiscreteSystem build_scheme(const TestProblem& problem, const SchemeSpec& spec, std::size_t n,
                                const SchemeOptions& opts = {});

/// Plain ODE system without a spatial discretisation (for integrator tests).
/// reconstruct_many returns the first state component.
SemiDiscreteSystem make_ode_system(std::vector<double> initial, SemiDiscreteSystem::RhsFn rhs);

std::vector<double> rhs_eval(const SemiDiscreteSystem& sys, double t, std::span<const double> a);
std::vector<double> reconstruct_on(const SemiDiscreteSystem& sys, std::span<const double> a,
                                   std::span<const double> xs);

/// Symmetric tridiagonal system solved by the Thomas algorithm.
class TridiagonalSolver {
public:
    TridiagonalSolver(std::vector<double> diag, std::vector<double> off);
    void solve(std::span<double> rhs) const;

private:
    std::vector<double> off_;
    std::vector<double> c_prime_;
    std::vector<double> inv_denom_;
};

/// Exact P1 finite-element mass matrix on a uniform grid: diagonal and off-diagonal.
std::pair<std::vector<double>, std::vector<double>> fe_mass_matrix(const UniformGrid& grid);

} // namespace nf
