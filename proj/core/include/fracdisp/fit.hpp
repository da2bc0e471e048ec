#pragma once

#include <span>

namespace fracdisp {

struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double rms_residual = 0.0;
};

/// Ordinary least squares y = slope * x + intercept; needs >= 2 distinct x.
LineFit least_squares(std::span<const double> x, std::span<const double> y);

}  // namespace fracdisp
