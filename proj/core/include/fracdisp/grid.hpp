#pragma once

#include <cstddef>
#include <vector>

namespace fracdisp {

/// Uniform sampling of the periodic interval [-L, L) used as a stand-in for
/// the real line.
///
/// Sample points are x_j = -L + j*dx with dx = 2L/N. Spectral coefficients
/// are stored in FFT order: storage index i holds the mode k = i for
/// i < N/2 and k = i - N otherwise, so that k ranges over {-N/2, ..., N/2-1}
/// and the wavenumber is xi_k = pi*k/L. Index N/2 is the unpaired Nyquist
/// mode k = -N/2.
class Grid1D {
public:
    Grid1D(double half_width, std::size_t point_count);

    double half_width() const noexcept { return half_width_; }
    std::size_t size() const noexcept { return point_count_; }
    double dx() const noexcept { return 2.0 * half_width_ / static_cast<double>(point_count_); }

    double x(std::size_t j) const noexcept { return -half_width_ + static_cast<double>(j) * dx(); }

    /// Integer mode number of storage index i.
    long mode(std::size_t i) const noexcept {
        const auto n = static_cast<long>(point_count_);
        const auto k = static_cast<long>(i);
        return k < n / 2 ? k : k - n;
    }
    double wavenumber(std::size_t i) const noexcept;
    std::size_t nyquist_index() const noexcept { return point_count_ / 2; }

    /// Largest resolved |xi|, pi*N/(2L).
    double max_wavenumber() const noexcept;

    std::vector<double> points() const;
    std::vector<double> wavenumbers() const;

    bool operator==(const Grid1D&) const = default;

private:
    double half_width_;
    std::size_t point_count_;
};

/// Validating factory; rejects odd N, N < 4 and non-positive L.
Grid1D make_grid(double half_width, std::size_t point_count);

}  // namespace fracdisp
