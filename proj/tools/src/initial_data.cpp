#include "fracdisp/cli/initial_data.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "fracdisp/heat_kernel.hpp"
#include "fracdisp/solver.hpp"

namespace fracdisp::cli {

namespace {

// Uniform on [-1, 1) from raw engine bits; distributions are not portable.
double unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53 * 2.0 - 1.0;
}

RealField random_smooth(const InitialDataSpec& spec, const Grid1D& grid) {
    constexpr int kModes = 8;
    std::mt19937_64 rng(spec.seed);
    double a[kModes], b[kModes];
    for (int k = 0; k < kModes; ++k) {
        a[k] = unit(rng);
        b[k] = unit(rng);
    }
    const double w = spec.width;
    RealField f = RealField::sample(grid, [&](double x) {
        double s = 0.0;
        for (int k = 0; k < kModes; ++k) {
            const double arg = (k + 1) * x / (2.0 * w);
            s += (a[k] * std::cos(arg) + b[k] * std::sin(arg)) / (k + 1);
        }
        return s * std::exp(-x * x / (4.0 * w * w));
    });
    const double size = smallness_norm(f);
    if (size > 0.0) f *= spec.amplitude / size;
    return f;
}

}  // namespace

InitialData make_initial_data(const InitialDataSpec& spec, const Grid1D& grid, double smallness_threshold) {
    RealField f = RealField::zeros(grid);
    const double a = spec.amplitude, w = spec.width, s = spec.shift;
    if (spec.kind == "gaussian" || spec.kind == "shifted_gaussian") {
        f = RealField::sample(grid, [=](double x) { return a * heat_kernel(x - s, w); });
    } else if (spec.kind == "odd_bump") {
        f = RealField::sample(grid, [=](double x) { return a * x * std::exp(-x * x / w); });
    } else if (spec.kind == "random_smooth") {
        f = random_smooth(spec, grid);
    } else {
        throw ConfigError("initial_data.kind: unknown '" + spec.kind + "'");
    }
    InitialData out{f, smallness_norm(f), {}};
    if (out.size > smallness_threshold) {
        std::ostringstream msg;
        msg << "initial data size " << out.size << " exceeds smallness threshold " << smallness_threshold;
        out.warnings.push_back(msg.str());
    }
    return out;
}

}  // namespace fracdisp::cli
