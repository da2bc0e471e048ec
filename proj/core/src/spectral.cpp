#include "fracdisp/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "fracdisp/fft.hpp"

namespace fracdisp {

namespace {

std::complex<double> ipow(std::complex<double> z, int k) {
    std::complex<double> out{1.0, 0.0};
    for (int i = 0; i < k; ++i) out *= z;
    return out;
}

}  // namespace

SpectralCoeffs transform(const RealField& field) {
    const std::size_t n = field.size();
    std::vector<std::complex<double>> in(n), out(n);
    const auto v = field.values();
    for (std::size_t j = 0; j < n; ++j) in[j] = v[j];
    ComplexFft(n).forward(in, out);
    return SpectralCoeffs(field.grid(), std::move(out));
}

InverseResult inverse_transform_checked(const SpectralCoeffs& coeffs, double time) {
    const std::size_t n = coeffs.grid().size();
    std::vector<std::complex<double>> out(n);
    ComplexFft(n).backward(coeffs.coeffs(), out);
    std::vector<double> re(n);
    double max_re = 0.0;
    double max_im = 0.0;
    const double scale = 1.0 / static_cast<double>(n);
    for (std::size_t j = 0; j < n; ++j) {
        re[j] = out[j].real() * scale;
        max_re = std::max(max_re, std::abs(re[j]));
        max_im = std::max(max_im, std::abs(out[j].imag() * scale));
    }
    const double residue = max_im / std::max(max_re, std::numeric_limits<double>::min());
    return {RealField(coeffs.grid(), std::move(re), time), residue};
}

RealField inverse_transform(const SpectralCoeffs& coeffs, double time) {
    return inverse_transform_checked(coeffs, time).field;
}

double abs_pow(double xi, double alpha) noexcept {
    return xi == 0.0 ? 0.0 : std::pow(std::abs(xi), alpha);
}

std::complex<double> linear_symbol(double xi, double alpha) noexcept {
    return {-xi * xi, abs_pow(xi, alpha) * xi};
}

RealField apply_multiplier(const RealField& field, const Symbol& symbol) {
    const Grid1D& grid = field.grid();
    const std::size_t n = grid.size();
    const RealFft fft(n);
    std::vector<std::complex<double>> half(fft.spectrum_size());
    fft.forward(field.values(), half);

    const std::size_t nyq = grid.nyquist_index();
    for (std::size_t i = 0; i < nyq; ++i) half[i] *= symbol(grid.wavenumber(i));
    const std::complex<double> m_nyq = symbol(grid.wavenumber(nyq));
    half[nyq] = m_nyq.imag() == 0.0 ? half[nyq] * m_nyq.real() : 0.0;

    std::vector<double> out(n);
    fft.backward(half, out);
    const double scale = 1.0 / static_cast<double>(n);
    for (double& v : out) v *= scale;
    return RealField(grid, std::move(out), field.time());
}

SpectralCoeffs apply_multiplier(const SpectralCoeffs& coeffs, const Symbol& symbol) {
    const Grid1D& grid = coeffs.grid();
    std::vector<std::complex<double>> out(coeffs.coeffs().begin(), coeffs.coeffs().end());
    const std::size_t nyq = grid.nyquist_index();
    for (std::size_t i = 0; i < out.size(); ++i) {
        const std::complex<double> m = symbol(grid.wavenumber(i));
        if (i == nyq && m.imag() != 0.0) {
            out[i] = 0.0;
        } else {
            out[i] *= m;
        }
    }
    return SpectralCoeffs(grid, std::move(out));
}

RealField apply_semigroup(const RealField& field, double t, const ModelParams& params) {
    if (!(t >= 0.0) || !std::isfinite(t)) {
        throw std::invalid_argument("semigroup time must be finite and nonnegative");
    }
    const double alpha = params.alpha;
    RealField out = apply_multiplier(field, [t, alpha](double xi) {
        return std::exp(t * linear_symbol(xi, alpha));
    });
    return out.with_time(field.time() + t);
}

RealField frac_disp_power(const RealField& field, int k, const ModelParams& params) {
    if (k < 0) throw std::invalid_argument("operator power must be nonnegative");
    if (k == 0) return field;
    const double alpha = params.alpha;
    return apply_multiplier(field, [k, alpha](double xi) {
        return ipow({0.0, abs_pow(xi, alpha) * xi}, k);
    });
}

RealField spatial_derivative(const RealField& field, int l) {
    if (l < 0) throw std::invalid_argument("derivative order must be nonnegative");
    if (l == 0) return field;
    return apply_multiplier(field, [l](double xi) { return ipow({0.0, xi}, l); });
}

double lp_norm(const RealField& field, double p, SupMode sup_mode) {
    if (!(p >= 1.0)) throw std::invalid_argument("L^p norm requires p >= 1");
    const auto v = field.values();
    std::size_t arg = 0;
    double peak = 0.0;
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (std::abs(v[j]) > peak) {
            peak = std::abs(v[j]);
            arg = j;
        }
    }
    if (peak == 0.0) return 0.0;

    if (std::isinf(p)) {
        if (sup_mode == SupMode::GridMax) return peak;
        const std::size_t n = v.size();
        const double sign = v[arg] < 0.0 ? -1.0 : 1.0;
        const double fm = sign * v[(arg + n - 1) % n];
        const double f0 = peak;
        const double fp = sign * v[(arg + 1) % n];
        const double curvature = fp - 2.0 * f0 + fm;
        if (curvature >= 0.0) return peak;
        return f0 - (fp - fm) * (fp - fm) / (8.0 * curvature);
    }

    // Scale by the peak to keep |f|^p representable.
    double sum = 0.0;
    for (double x : v) sum += std::pow(std::abs(x) / peak, p);
    return peak * std::pow(sum * field.grid().dx(), 1.0 / p);
}

double integral(const RealField& field) {
    double sum = 0.0;
    for (double x : field.values()) sum += x;
    return sum * field.grid().dx();
}

double tail_mass_fraction(const RealField& field) {
    const Grid1D& grid = field.grid();
    const double edge = 0.5 * grid.half_width();
    double total = 0.0;
    double tail = 0.0;
    const auto v = field.values();
    for (std::size_t j = 0; j < v.size(); ++j) {
        total += std::abs(v[j]);
        if (std::abs(grid.x(j)) > edge) tail += std::abs(v[j]);
    }
    return total == 0.0 ? 0.0 : tail / total;
}

}  // namespace fracdisp
