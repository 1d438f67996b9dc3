#include "nf/projection.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <string>
#include <utility>

namespace nf {

TentBasis::TentBasis(UniformGrid grid) : grid_(std::move(grid)) {
    if (grid_.interval().periodic) {
        throw std::invalid_argument("TentBasis is defined on non-periodic grids only");
    }
}

std::size_t TentBasis::element_of(double x) const {
    const auto& nodes = grid_.nodes();
    const std::size_t n = grid_.elements();
    const double s = std::floor((x - grid_.interval().a) / grid_.spacing());
    std::size_t e = s <= 0.0 ? 0 : std::min(static_cast<std::size_t>(s), n - 1);
    // Rounding in the division can put x one element off near a node.
    if (e + 1 < n && x >= nodes[e + 1]) {
        ++e;
    } else if (e > 0 && x < nodes[e]) {
        --e;
    }
    return e;
}

double TentBasis::eval(std::size_t i, double x) const {
    const auto& nodes = grid_.nodes();
    const std::size_t n = grid_.elements();
    if (i > n) {
        throw std::out_of_range("tent basis index " + std::to_string(i) + " out of range [0, " +
                                std::to_string(n) + "]");
    }
    if (x == nodes[i]) {
        return 1.0;
    }
    if (i > 0 && x >= nodes[i - 1] && x <= nodes[i]) {
        return (x - nodes[i - 1]) / (nodes[i] - nodes[i - 1]);
    }
    if (i < n && x >= nodes[i] && x <= nodes[i + 1]) {
        return (nodes[i + 1] - x) / (nodes[i + 1] - nodes[i]);
    }
    return 0.0;
}

double tent_eval(const TentBasis& basis, std::size_t i, double x) { return basis.eval(i, x); }

double piecewise_linear_interp(std::span<const double> values, const TentBasis& basis, double x) {
    const auto& grid = basis.grid();
    if (values.size() != grid.size()) {
        throw std::invalid_argument("piecewise_linear_interp: expected " +
                                    std::to_string(grid.size()) + " values, got " +
                                    std::to_string(values.size()));
    }
    if (!grid.interval().contains(x)) {
        throw std::out_of_range("piecewise_linear_interp: x = " + std::to_string(x) +
                                " outside the grid interval");
    }
    const auto& nodes = grid.nodes();
    const std::size_t e = basis.element_of(x);
    if (x == nodes[e]) {
        return values[e];
    }
    if (x == nodes[e + 1]) {
        return values[e + 1];
    }
    const double t = (x - nodes[e]) / (nodes[e + 1] - nodes[e]);
    return values[e] + t * (values[e + 1] - values[e]);
}

ChebyshevBasis::ChebyshevBasis(ChebyshevGrid grid) : grid_(std::move(grid)) {
    const std::size_t n = grid_.degree();
    weights_.resize(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        weights_[i] = (i % 2 == 0) ? 1.0 : -1.0;
    }
    weights_.front() *= 0.5;
    weights_.back() *= 0.5;
}

void ChebyshevBasis::lagrange_row(double x, std::span<double> out) const {
    const auto& nodes = grid_.nodes();
    if (out.size() != nodes.size()) {
        throw std::invalid_argument("lagrange_row: output size mismatch");
    }
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (x == nodes[i]) {
            std::fill(out.begin(), out.end(), 0.0);
            out[i] = 1.0;
            return;
        }
    }
    double denom = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        out[i] = weights_[i] / (x - nodes[i]);
        denom += out[i];
    }
    for (double& v : out) {
        v /= denom;
    }
}

double barycentric_interp(std::span<const double> values, const ChebyshevBasis& basis, double x) {
    const auto& nodes = basis.grid().nodes();
    const auto& w = basis.barycentric_weights();
    if (values.size() != nodes.size()) {
        throw std::invalid_argument("barycentric_interp: expected " +
                                    std::to_string(nodes.size()) + " values, got " +
                                    std::to_string(values.size()));
    }
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const double d = x - nodes[i];
        if (d == 0.0) {
            return values[i];
        }
        const double t = w[i] / d;
        num += t * values[i];
        den += t;
    }
    return num / den;
}

FourierBasis::FourierBasis(std::size_t max_mode) : n_(max_mode) {}

std::vector<double> FourierBasis::sample_points() const {
    const std::size_t m = size();
    std::vector<double> x(m);
    for (std::size_t l = 0; l < m; ++l) {
        x[l] = 2.0 * std::numbers::pi * static_cast<double>(l) / static_cast<double>(m);
    }
    return x;
}

namespace {

// FFTW planning is not thread-safe; execution on fresh arrays is.
class PlanCache {
public:
    static PlanCache& instance() {
        static PlanCache cache;
        return cache;
    }

    fftw_plan complex_plan(int m, int sign) {
        std::lock_guard lock(mutex_);
        auto key = std::make_pair(m, sign);
        if (auto it = complex_.find(key); it != complex_.end()) {
            return it->second;
        }
        auto* in = fftw_alloc_complex(static_cast<std::size_t>(m));
        auto* out = fftw_alloc_complex(static_cast<std::size_t>(m));
        fftw_plan p = fftw_plan_dft_1d(m, in, out, sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
        fftw_free(in);
        fftw_free(out);
        complex_.emplace(key, p);
        return p;
    }

    fftw_plan dct1_plan(int size) {
        std::lock_guard lock(mutex_);
        if (auto it = dct_.find(size); it != dct_.end()) {
            return it->second;
        }
        auto* in = fftw_alloc_real(static_cast<std::size_t>(size));
        auto* out = fftw_alloc_real(static_cast<std::size_t>(size));
        fftw_plan p = fftw_plan_r2r_1d(size, in, out, FFTW_REDFT00, FFTW_ESTIMATE | FFTW_UNALIGNED);
        fftw_free(in);
        fftw_free(out);
        dct_.emplace(size, p);
        return p;
    }

    ~PlanCache() {
        for (auto& [k, p] : complex_) fftw_destroy_plan(p);
        for (auto& [k, p] : dct_) fftw_destroy_plan(p);
    }

private:
    std::mutex mutex_;
    std::map<std::pair<int, int>, fftw_plan> complex_;
    std::map<int, fftw_plan> dct_;
};

std::size_t check_odd(std::size_t m, const char* what) {
    if (m == 0 || m % 2 == 0) {
        throw std::invalid_argument(std::string(what) + ": length must be odd (2n+1), got " +
                                    std::to_string(m));
    }
    return (m - 1) / 2;
}

// Natural FFT order k = 0..m-1 <-> mode j with k = j mod m.
std::size_t fft_slot(long j, std::size_t m) {
    return j >= 0 ? static_cast<std::size_t>(j) : static_cast<std::size_t>(static_cast<long>(m) + j);
}

void run_dft(const Complex* in, Complex* out, std::size_t m, int sign) {
    fftw_plan p = PlanCache::instance().complex_plan(static_cast<int>(m), sign);
    // const_cast: FFTW does not modify the input of an out-of-place transform.
    fftw_execute_dft(p, reinterpret_cast<fftw_complex*>(const_cast<Complex*>(in)),
                     reinterpret_cast<fftw_complex*>(out));
}

} // namespace

std::vector<Complex> dft_forward(std::span<const Complex> samples, DftBackend backend) {
    const std::size_t m = samples.size();
    const long n = static_cast<long>(check_odd(m, "dft_forward"));
    std::vector<Complex> coeffs(m);
    const double inv_m = 1.0 / static_cast<double>(m);
    if (backend == DftBackend::direct) {
        for (long j = -n; j <= n; ++j) {
            Complex acc{0.0, 0.0};
            for (std::size_t l = 0; l < m; ++l) {
                // Reduce j*l mod m so the angle stays small.
                const auto r = static_cast<double>((((j * static_cast<long>(l)) % static_cast<long>(m)) +
                                                    static_cast<long>(m)) % static_cast<long>(m));
                acc += samples[l] * std::polar(1.0, -2.0 * std::numbers::pi * r / static_cast<double>(m));
            }
            coeffs[static_cast<std::size_t>(j + n)] = acc * inv_m;
        }
        return coeffs;
    }
    std::vector<Complex> natural(m);
    run_dft(samples.data(), natural.data(), m, FFTW_FORWARD);
    for (long j = -n; j <= n; ++j) {
        coeffs[static_cast<std::size_t>(j + n)] = natural[fft_slot(j, m)] * inv_m;
    }
    return coeffs;
}

std::vector<Complex> dft_backward(std::span<const Complex> coeffs, DftBackend backend) {
    const std::size_t m = coeffs.size();
    const long n = static_cast<long>(check_odd(m, "dft_backward"));
    std::vector<Complex> samples(m);
    if (backend == DftBackend::direct) {
        for (std::size_t l = 0; l < m; ++l) {
            Complex acc{0.0, 0.0};
            for (long j = -n; j <= n; ++j) {
                const auto r = static_cast<double>((((j * static_cast<long>(l)) % static_cast<long>(m)) +
                                                    static_cast<long>(m)) % static_cast<long>(m));
                acc += coeffs[static_cast<std::size_t>(j + n)] *
                       std::polar(1.0, 2.0 * std::numbers::pi * r / static_cast<double>(m));
            }
            samples[l] = acc;
        }
        return samples;
    }
    std::vector<Complex> natural(m);
    for (long j = -n; j <= n; ++j) {
        natural[fft_slot(j, m)] = coeffs[static_cast<std::size_t>(j + n)];
    }
    run_dft(natural.data(), samples.data(), m, FFTW_BACKWARD);
    return samples;
}

double fourier_reconstruct(std::span<const Complex> coeffs, double x) {
    const std::size_t m = coeffs.size();
    const long n = static_cast<long>(check_odd(m, "fourier_reconstruct"));
    // Re(c_0) + sum_{j>=1} Re(c_j e^{ijx} + c_{-j} e^{-ijx}), powers by recurrence.
    const Complex step = std::polar(1.0, x);
    Complex power{1.0, 0.0};
    double acc = coeffs[static_cast<std::size_t>(n)].real();
    for (long j = 1; j <= n; ++j) {
        if (j % 32 == 0) {
            power = std::polar(1.0, static_cast<double>(j) * x);
        } else {
            power *= step;
        }
        const Complex plus = coeffs[static_cast<std::size_t>(n + j)];
        const Complex minus = coeffs[static_cast<std::size_t>(n - j)];
        acc += (plus * power).real() + (minus * std::conj(power)).real();
    }
    return acc;
}

std::vector<double> dct1(std::span<const double> x) {
    if (x.size() < 2) {
        throw std::invalid_argument("dct1 needs at least two points");
    }
    std::vector<double> y(x.size());
    fftw_plan p = PlanCache::instance().dct1_plan(static_cast<int>(x.size()));
    fftw_execute_r2r(p, const_cast<double*>(x.data()), y.data());
    return y;
}

} // namespace nf
