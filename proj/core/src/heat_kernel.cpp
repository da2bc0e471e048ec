#include "fracdisp/heat_kernel.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "fracdisp/fft.hpp"

namespace fracdisp {

double heat_kernel(double x, double t, int l) {
    if (!(t > 0.0)) throw std::invalid_argument("heat kernel requires t > 0");
    if (l < 0 || l > kMaxHeatDerivative) {
        throw std::invalid_argument("heat kernel derivative order must be in [0, 6]");
    }
    const double scale = std::sqrt(4.0 * t);
    const double z = x / scale;
    const double g = std::exp(-z * z) / std::sqrt(std::numbers::pi * 4.0 * t);
    if (l == 0) return g;

    // H_0 = 1, H_1 = 2z, H_{k+1} = 2z H_k - 2k H_{k-1}
    double h_prev = 1.0;
    double h = 2.0 * z;
    for (int k = 1; k < l; ++k) {
        const double next = 2.0 * z * h - 2.0 * k * h_prev;
        h_prev = h;
        h = next;
    }
    const double sign = (l % 2 == 0) ? 1.0 : -1.0;
    return sign * h * g / std::pow(scale, l);
}

RealField heat_kernel_field(const Grid1D& grid, double t, int l) {
    std::vector<double> v(grid.size());
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = heat_kernel(grid.x(j), t, l);
    return RealField(grid, std::move(v), t);
}

RealField heat_symbol_field(const Grid1D& grid, double t, const Symbol& symbol) {
    if (!(t > 0.0)) throw std::invalid_argument("heat symbol field requires t > 0");
    const std::size_t n = grid.size();
    const RealFft fft(n);
    std::vector<std::complex<double>> half(fft.spectrum_size());
    const double inv_dx = 1.0 / grid.dx();
    const std::size_t nyq = grid.nyquist_index();
    for (std::size_t i = 0; i <= nyq; ++i) {
        const double xi = grid.wavenumber(i);
        // Sample offset x_0 = -L contributes exp(-i xi_k L) = (-1)^k.
        const double phase = (grid.mode(i) % 2 == 0) ? 1.0 : -1.0;
        const double gauss = std::exp(-t * xi * xi);
        if (gauss == 0.0) {
            half[i] = 0.0;
            continue;
        }
        std::complex<double> m = symbol(xi);
        if (i == nyq && m.imag() != 0.0) m = 0.0;
        half[i] = phase * inv_dx * gauss * m;
    }
    std::vector<double> out(n);
    fft.backward(half, out);
    const double scale = 1.0 / static_cast<double>(n);
    for (double& v : out) v *= scale;
    return RealField(grid, std::move(out), t);
}

}  // namespace fracdisp
