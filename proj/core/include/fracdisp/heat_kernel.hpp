#pragma once

#include "fracdisp/field.hpp"
#include "fracdisp/spectral.hpp"

namespace fracdisp {

inline constexpr int kMaxHeatDerivative = 6;

/// d_x^l G(x, t) for G(x, t) = exp(-x^2 / 4t) / sqrt(4 pi t), 0 <= l <= 6,
/// via d_x^l G = (-1)^l (4t)^{-l/2} H_l(x / sqrt(4t)) G with physicists' Hermite H_l.
double heat_kernel(double x, double t, int l = 0);

/// Pointwise samples of d_x^l G(., t).
RealField heat_kernel_field(const Grid1D& grid, double t, int l = 0);

/// F^{-1}[m(xi) exp(-t xi^2)] synthesized from the exact Gaussian spectrum.
///
/// Avoids sampling G and transforming it, so high-order symbols do not
/// amplify transform roundoff at large |xi|. The result is the periodization
/// of the whole-line function, which matches it when sqrt(t) << L.
RealField heat_symbol_field(const Grid1D& grid, double t, const Symbol& symbol);

}  // namespace fracdisp
