#include "oracles.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>

#include "fracdisp/spectral.hpp"

namespace fracdisp::oracle {

namespace {

using boost::math::quadrature::gauss;
using Rule = gauss<double, 20>;

constexpr double kPi = std::numbers::pi;

double g(double x, double t) { return std::exp(-x * x / (4.0 * t)) / std::sqrt(4.0 * kPi * t); }
double dg(double x, double t) { return -x / (2.0 * t) * g(x, t); }

template <class F>
double panels(F&& f, double a, double b, int n) {
    const double h = (b - a) / n;
    double total = 0.0;
    for (int i = 0; i < n; ++i) total += Rule::integrate(f, a + i * h, a + (i + 1) * h);
    return total;
}

}  // namespace

double semigroup_gaussian(double x, double t, double alpha, double shift, double t0) {
    const double a = t + t0;
    const double xi_max = std::sqrt(50.0 / a);
    const double y = x - shift;
    // Enough panels to resolve the phase at both ends.
    const double phase = std::abs(y) * xi_max + t * std::pow(xi_max, alpha + 1.0);
    const int n = 64 + static_cast<int>(phase);
    auto f = [&](double xi) { return std::exp(-a * xi * xi) * std::cos(y * xi + t * std::pow(xi, alpha + 1.0)); };
    return panels(f, 0.0, xi_max, n) / kPi;
}

double fstar(double y) {
    const double c = 1.0 / (8.0 * std::pow(kPi, 1.5));
    return c * std::exp(-0.75 * y * y) - c / std::sqrt(3.0) * std::exp(-0.25 * y * y);
}

double fstar_prime(double y) {
    const double c = 1.0 / (8.0 * std::pow(kPi, 1.5));
    return -1.5 * y * c * std::exp(-0.75 * y * y) + 0.5 * y * c / std::sqrt(3.0) * std::exp(-0.25 * y * y);
}

double psi_star_nested(double x, int resolution) {
    const int ns = 8 * resolution;
    const int nz = 20 * resolution;
    auto small_s = [&](double s) {
        const double rs = std::sqrt(s);
        auto inner = [&](double z) { return dg(x - rs * z, 1.0 - s) * fstar(z); };
        return panels(inner, -14.0, 14.0, nz) / s;
    };
    auto large_s = [&](double s) {
        const double r = 2.0 * std::sqrt(1.0 - s);
        auto inner = [&](double w) {
            const double y = x - r * w;
            return std::exp(-w * w) / std::sqrt(kPi) * fstar_prime(y / std::sqrt(s)) / (s * s);
        };
        return panels(inner, -7.0, 7.0, nz);
    };
    return panels(small_s, 0.0, 0.5, ns) + panels(large_s, 0.5, 1.0, ns);
}

std::vector<double> duhamel_v_spectral(double t, const Grid1D& grid) {
    std::vector<double> acc(grid.size(), 0.0);
    if (t <= 1.0) return acc;
    auto at_sigma = [&](double sigma) {
        const double tau = std::exp(sigma);
        RealField cube = RealField::sample(grid, [tau](double x) {
            const double v = g(x, tau);
            return v * v * v;
        });
        const double lag = t - tau;
        return apply_multiplier(cube, [lag](double xi) {
            return std::complex<double>(0.0, xi) * std::exp(-lag * xi * xi);
        });
    };
    using GK = boost::math::quadrature::gauss_kronrod<double, 61>;
    // Fixed 61-point Kronrod nodes on panels; the integrand is smooth in sigma.
    const int n = 8;
    const double b = std::log(t);
    const double h = b / n;
    const auto& nodes = GK::abscissa();
    const auto& weights = GK::weights();
    for (int p = 0; p < n; ++p) {
        const double mid = (p + 0.5) * h;
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            for (int sgn : {1, -1}) {
                if (nodes[i] == 0.0 && sgn < 0) continue;
                const double sigma = mid + sgn * 0.5 * h * nodes[i];
                const RealField f = at_sigma(sigma);
                const double w = 0.5 * h * weights[i] * std::exp(sigma);
                for (std::size_t j = 0; j < acc.size(); ++j) acc[j] += w * f[j];
            }
        }
    }
    return acc;
}

double limit_combination_l2(double a, double b) {
    auto f = [&](double x) {
        const double v = a * dg(x, 1.0) + b * psi_star_nested(x, 1);
        return v * v;
    };
    return std::sqrt(panels(f, -24.0, 24.0, 24));
}

}  // namespace fracdisp::oracle
