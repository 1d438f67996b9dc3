#pragma once

#include "nf/model.hpp"

#include <complex>
#include <span>
#include <vector>

namespace nf {

using Complex = std::complex<double>;

/// Piecewise-linear Lagrange ("tent") basis on a non-periodic uniform grid.
class TentBasis {
public:
    explicit TentBasis(UniformGrid grid);

    const UniformGrid& grid() const { return grid_; }
    std::size_t size() const { return grid_.size(); }

    /// l_i(x); l_0 and l_n are supported on the first and last element only.
    double eval(std::size_t i, double x) const;

    /// Element e with x in [x_e, x_{e+1}], found by index arithmetic.
    std::size_t element_of(double x) const;

private:
    UniformGrid grid_;
};

double tent_eval(const TentBasis& basis, std::size_t i, double x);

/// Continuous piecewise-linear interpolant through values at the grid nodes.
/// Throws std::out_of_range when x lies outside the grid interval.
double piecewise_linear_interp(std::span<const double> values, const TentBasis& basis, double x);

/// Lagrange basis on Chebyshev points, evaluated in barycentric form.
class ChebyshevBasis {
public:
    explicit ChebyshevBasis(ChebyshevGrid grid);

    const ChebyshevGrid& grid() const { return grid_; }
    const std::vector<double>& barycentric_weights() const { return weights_; }
    std::size_t size() const { return grid_.size(); }

    /// Row of Lagrange basis values l_0(x) .. l_n(x).
    void lagrange_row(double x, std::span<double> out) const;

private:
    ChebyshevGrid grid_;
    std::vector<double> weights_;
};

double barycentric_interp(std::span<const double> values, const ChebyshevBasis& basis, double x);

/// Complex exponentials e^{ijx}, j = -n..n, on (0, 2 pi).
class FourierBasis {
public:
    explicit FourierBasis(std::size_t max_mode);

    std::size_t max_mode() const { return n_; }
    std::size_t size() const { return 2 * n_ + 1; }
    /// Sample points x_l = 2 pi l / m.
    std::vector<double> sample_points() const;

private:
    std::size_t n_;
};

enum class DftBackend { fft, direct };

/// c_j = (1/m) sum_l v_l e^{-i j x_l}, x_l = 2 pi l / m, for odd m = 2n+1.
/// Coefficient j is stored at position j + n. Even m is rejected.
std::vector<Complex> dft_forward(std::span<const Complex> samples,
                                 DftBackend backend = DftBackend::fft);

/// v_l = sum_j c_j e^{i j x_l}; inverse of dft_forward.
std::vector<Complex> dft_backward(std::span<const Complex> coeffs,
                                  DftBackend backend = DftBackend::fft);

/// Re(sum_j c_j e^{ijx}) with coefficients laid out as in dft_forward.
double fourier_reconstruct(std::span<const Complex> coeffs, double x);

/// Type-I DCT: Y_j = X_0 + (-1)^j X_N + 2 sum_{m=1}^{N-1} X_m cos(pi m j / N).
std::vector<double> dct1(std::span<const double> x);

} // namespace nf
