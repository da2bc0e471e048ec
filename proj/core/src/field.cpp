#include "fracdisp/field.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fracdisp {

namespace {

void require_same_grid(const Grid1D& a, const Grid1D& b) {
    if (!(a == b)) throw std::invalid_argument("field grids do not match");
}

}  // namespace

RealField::RealField(Grid1D grid, std::vector<double> values, double time)
    : grid_(grid), values_(std::move(values)), time_(time) {
    if (values_.size() != grid_.size()) {
        throw std::invalid_argument("field length does not match grid point count");
    }
    if (!(time_ >= 0.0) || !std::isfinite(time_)) {
        throw std::invalid_argument("field time must be finite and nonnegative");
    }
    if (!std::all_of(values_.begin(), values_.end(), [](double v) { return std::isfinite(v); })) {
        throw std::invalid_argument("field values must be finite");
    }
}

RealField RealField::zeros(const Grid1D& grid, double time) {
    return RealField(grid, std::vector<double>(grid.size(), 0.0), time);
}

RealField RealField::sample(const Grid1D& grid, const std::function<double(double)>& f,
                            double time) {
    std::vector<double> v(grid.size());
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = f(grid.x(j));
    return RealField(grid, std::move(v), time);
}

RealField RealField::with_time(double time) const {
    RealField out = *this;
    if (!(time >= 0.0)) throw std::invalid_argument("field time must be nonnegative");
    out.time_ = time;
    return out;
}

RealField& RealField::operator+=(const RealField& other) { return axpy(1.0, other); }
RealField& RealField::operator-=(const RealField& other) { return axpy(-1.0, other); }

RealField& RealField::operator*=(double s) {
    for (double& v : values_) v *= s;
    return *this;
}

RealField& RealField::axpy(double s, const RealField& other) {
    require_same_grid(grid_, other.grid_);
    for (std::size_t j = 0; j < values_.size(); ++j) values_[j] += s * other.values_[j];
    return *this;
}

RealField operator+(RealField a, const RealField& b) { return a += b; }
RealField operator-(RealField a, const RealField& b) { return a -= b; }
RealField operator*(double s, RealField a) { return a *= s; }

SpectralCoeffs::SpectralCoeffs(Grid1D grid, std::vector<std::complex<double>> coeffs)
    : grid_(grid), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != grid_.size()) {
        throw std::invalid_argument("coefficient count does not match grid point count");
    }
}

double SpectralCoeffs::conjugate_asymmetry() const {
    const std::size_t n = coeffs_.size();
    double worst = std::abs(coeffs_[grid_.nyquist_index()].imag());
    for (std::size_t i = 1; i < n / 2; ++i) {
        worst = std::max(worst, std::abs(coeffs_[n - i] - std::conj(coeffs_[i])));
    }
    return std::max(worst, std::abs(coeffs_[0].imag()));
}

}  // namespace fracdisp
