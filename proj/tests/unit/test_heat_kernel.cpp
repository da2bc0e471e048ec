#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "fracdisp/heat_kernel.hpp"
#include "fracdisp/spectral.hpp"

using namespace fracdisp;

TEST(HeatKernel, ClosedFormDerivatives) {
    const double x = 0.7, t = 1.3;
    const double g = std::exp(-x * x / (4 * t)) / std::sqrt(4 * std::numbers::pi * t);
    EXPECT_NEAR(heat_kernel(x, t), g, 1e-16);
    EXPECT_NEAR(heat_kernel(x, t, 1), -x / (2 * t) * g, 1e-16);
    EXPECT_NEAR(heat_kernel(x, t, 2), (x * x / (4 * t * t) - 1 / (2 * t)) * g, 1e-16);
    EXPECT_NEAR(heat_kernel(x, t, 3), (3 * x / (4 * t * t) - x * x * x / (8 * t * t * t)) * g, 1e-16);
}

TEST(HeatKernel, DerivativesSatisfyHeatEquation) {
    // d_t d^l G = d^{l+2} G, checked by central differences in t.
    const double x = -1.1, t = 2.0, h = 1e-5;
    for (int l = 0; l <= 4; ++l) {
        const double dt = (heat_kernel(x, t + h, l) - heat_kernel(x, t - h, l)) / (2 * h);
        EXPECT_NEAR(dt, heat_kernel(x, t, l + 2), 1e-9) << l;
    }
}

TEST(HeatKernel, RejectsBadArguments) {
    EXPECT_THROW(heat_kernel(0.0, 0.0), std::invalid_argument);
    EXPECT_THROW(heat_kernel(0.0, 1.0, 7), std::invalid_argument);
    EXPECT_THROW(heat_kernel(0.0, 1.0, -1), std::invalid_argument);
}

TEST(HeatKernel, SymbolFieldMatchesSamples) {
    const Grid1D grid(40.0, 512);
    const RealField a = heat_symbol_field(grid, 2.0, [](double xi) { return std::complex<double>(-xi * xi, 0.0); });
    const RealField b = heat_kernel_field(grid, 2.0, 2);
    double worst = 0.0;
    for (std::size_t j = 0; j < grid.size(); ++j) worst = std::max(worst, std::abs(a[j] - b[j]));
    EXPECT_LE(worst, 1e-15);
}

TEST(HeatKernel, SemigroupProperty) {
    const Grid1D grid(50.0, 1024);
    const RealField g1 = heat_kernel_field(grid, 0.7);
    const RealField conv = apply_multiplier(g1, [](double xi) { return std::exp(-1.8 * xi * xi); });
    const RealField g = heat_kernel_field(grid, 2.5);
    double worst = 0.0;
    for (std::size_t j = 0; j < grid.size(); ++j) worst = std::max(worst, std::abs(conv[j] - g[j]));
    EXPECT_LE(worst, 1e-10);
}
