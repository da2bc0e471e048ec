#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "fracdisp/grid.hpp"

namespace fracdisp {

/// Real samples of a function on a Grid1D at a given time.
class RealField {
public:
    RealField(Grid1D grid, std::vector<double> values, double time = 0.0);

    /// Zero field on `grid`.
    static RealField zeros(const Grid1D& grid, double time = 0.0);

    /// Samples f(x_j).
    static RealField sample(const Grid1D& grid, const std::function<double(double)>& f,
                            double time = 0.0);

    const Grid1D& grid() const noexcept { return grid_; }
    double time() const noexcept { return time_; }
    std::span<const double> values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }
    double operator[](std::size_t j) const noexcept { return values_[j]; }

    RealField with_time(double time) const;

    RealField& operator+=(const RealField& other);
    RealField& operator-=(const RealField& other);
    RealField& operator*=(double s);

    /// this += s * other
    RealField& axpy(double s, const RealField& other);

private:
    Grid1D grid_;
    std::vector<double> values_;
    double time_;
};

RealField operator+(RealField a, const RealField& b);
RealField operator-(RealField a, const RealField& b);
RealField operator*(double s, RealField a);

/// Discrete Fourier coefficients on a Grid1D, stored in FFT order (see Grid1D).
///
/// Normalization: coeffs[k] = sum_j f_j exp(-2 pi i j k / N) (unnormalized
/// forward), and the inverse divides by N. Hence discrete Parseval reads
/// sum_j |f_j|^2 = (1/N) sum_k |coeffs[k]|^2, and coeffs[k] ~ e^{-i xi_k L} fhat(xi_k) / dx
/// where fhat(xi) = int f(x) e^{-i x xi} dx.
class SpectralCoeffs {
public:
    SpectralCoeffs(Grid1D grid, std::vector<std::complex<double>> coeffs);

    const Grid1D& grid() const noexcept { return grid_; }
    std::span<const std::complex<double>> coeffs() const noexcept { return coeffs_; }
    std::span<std::complex<double>> coeffs() noexcept { return coeffs_; }
    std::complex<double> operator[](std::size_t i) const noexcept { return coeffs_[i]; }

    /// max_k |c(-xi_k) - conj(c(xi_k))| over paired modes; the Nyquist mode must be real.
    double conjugate_asymmetry() const;

private:
    Grid1D grid_;
    std::vector<std::complex<double>> coeffs_;
};

}  // namespace fracdisp
