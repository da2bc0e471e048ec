#include "fracdisp/grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace fracdisp {

namespace {
constexpr std::size_t kMinPoints = 4;
}

Grid1D::Grid1D(double half_width, std::size_t point_count)
    : half_width_(half_width), point_count_(point_count) {
    if (!(half_width > 0.0) || !std::isfinite(half_width)) {
        throw std::invalid_argument("grid half width must be positive and finite");
    }
    if (point_count % 2 != 0) {
        throw std::invalid_argument("grid point count must be even, got " +
                                    std::to_string(point_count));
    }
    if (point_count < kMinPoints) {
        throw std::invalid_argument("grid point count must be at least " +
                                    std::to_string(kMinPoints));
    }
}

double Grid1D::wavenumber(std::size_t i) const noexcept {
    return std::numbers::pi * static_cast<double>(mode(i)) / half_width_;
}

double Grid1D::max_wavenumber() const noexcept {
    return std::numbers::pi * static_cast<double>(point_count_ / 2) / half_width_;
}

std::vector<double> Grid1D::points() const {
    std::vector<double> xs(point_count_);
    for (std::size_t j = 0; j < point_count_; ++j) xs[j] = x(j);
    return xs;
}

std::vector<double> Grid1D::wavenumbers() const {
    std::vector<double> ks(point_count_);
    for (std::size_t i = 0; i < point_count_; ++i) ks[i] = wavenumber(i);
    return ks;
}

Grid1D make_grid(double half_width, std::size_t point_count) {
    return Grid1D(half_width, point_count);
}

}  // namespace fracdisp
