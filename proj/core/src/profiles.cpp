#include "fracdisp/profiles.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "fracdisp/errors.hpp"
#include "fracdisp/spectral.hpp"

namespace fracdisp {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt3 = std::numbers::sqrt3;

// Below this s the difference quotient is replaced by its Taylor expansion.
constexpr double kSmallS = 1e-6;

double psi_integrand(double x, double s) {
    if (s < kSmallS) {
        return -(2.0 / 3.0) * heat_kernel(x, 1.0, 3) + (2.0 / 9.0) * s * heat_kernel(x, 1.0, 5);
    }
    return (heat_kernel(x, 1.0 - 2.0 * s / 3.0, 1) - heat_kernel(x, 1.0, 1)) / s;
}

// Past this |x| / sqrt(time) every Gaussian in the integrands underflows.
constexpr double kUnderflowRadius = 60.0;

// Integrates f(x_j, s) over s in [a, b] for every point with one shared
// composite rule at panel_count and 2*panel_count panels. Points with
// |x| > cutoff are set to zero.
template <class F>
std::vector<double> integrate_pointwise(const std::vector<double>& xs, F&& f, double a, double b,
                                        const QuadratureSpec& spec, double cutoff) {
    spec.validate();
    const CompositeRule coarse = composite_rule(a, b, spec.order, spec.panel_count);
    const CompositeRule fine = composite_rule(a, b, spec.order, 2 * spec.panel_count);
    std::vector<double> out(xs.size());
    double worst = 0.0;
    for (std::size_t j = 0; j < xs.size(); ++j) {
        if (std::abs(xs[j]) > cutoff) continue;
        double c = 0.0;
        for (std::size_t i = 0; i < coarse.nodes.size(); ++i) c += coarse.weights[i] * f(xs[j], coarse.nodes[i]);
        double v = 0.0;
        for (std::size_t i = 0; i < fine.nodes.size(); ++i) v += fine.weights[i] * f(xs[j], fine.nodes[i]);
        worst = std::max(worst, std::abs(v - c));
        out[j] = v;
    }
    if (!(worst <= spec.abs_tol)) detail::raise_quadrature_failure(worst, spec.abs_tol);
    return out;
}

std::vector<double> scaled_points(const Grid1D& grid, double t) {
    const double inv = 1.0 / std::sqrt(t);
    std::vector<double> z(grid.size());
    for (std::size_t j = 0; j < z.size(); ++j) z[j] = grid.x(j) * inv;
    return z;
}

// (t |xi|^a i xi)^k / k! summed for k = 0..K.
std::complex<double> disp_series(double xi, double t, double alpha, int K) {
    const std::complex<double> w(0.0, t * abs_pow(xi, alpha) * xi);
    std::complex<double> term = 1.0;
    std::complex<double> sum = 1.0;
    for (int k = 1; k <= K; ++k) {
        term *= w / static_cast<double>(k);
        sum += term;
    }
    return sum;
}

std::complex<double> resonant_symbol(double xi, double t, double alpha, int n) {
    const std::complex<double> w(0.0, t * abs_pow(xi, alpha) * xi);
    std::complex<double> term = 1.0;
    for (int k = 1; k <= n; ++k) term *= w / static_cast<double>(k);
    return term;
}

// Highest dispersive power kept alongside {M G - m d_x G}.
int series_order(const Regime& r) {
    switch (r.kind) {
        case Regime::Case::I: return 0;
        case Regime::Case::II: return r.n - 1;
        case Regime::Case::III: return r.n;
    }
    return 0;
}

}  // namespace

double cube_mass_factor() noexcept { return 1.0 / (4.0 * kSqrt3 * kPi); }

double log_coefficient(double beta, double mass) noexcept {
    return beta * mass * mass * mass / (12.0 * kSqrt3 * kPi);
}

double fstar(double y) noexcept {
    const double norm = 8.0 * std::pow(kPi, 1.5);
    return std::exp(-0.75 * y * y) / norm - std::exp(-0.25 * y * y) / (kSqrt3 * norm);
}

double f_scaled(double y, double s) {
    if (!(s > 0.0)) throw std::invalid_argument("F(y, s) requires s > 0");
    return std::pow(s, -1.5) * fstar(y / std::sqrt(s));
}

double psi_star(double x, const QuadratureSpec& quad) { return psi_star_partial(x, 0.0, quad); }

double psi_star_partial(double x, double s_lower, const QuadratureSpec& quad) {
    if (!(s_lower >= 0.0 && s_lower <= 1.0)) {
        throw std::invalid_argument("psi_star_partial requires 0 <= s_lower <= 1");
    }
    if (s_lower == 1.0) return 0.0;
    const auto r = integrate([x](double s) { return psi_integrand(x, s); }, s_lower, 1.0, quad);
    return cube_mass_factor() * r.value;
}

void ProfileRequest::validate() const {
    if (!(time > 0.0) || !std::isfinite(time)) throw std::invalid_argument("profile time must be > 0");
    if (!std::isfinite(mass) || !std::isfinite(first_moment) || !std::isfinite(duhamel_mass)) {
        throw std::invalid_argument("profile moments must be finite");
    }
}

RealField psi_star_field(const Grid1D& grid, const QuadratureSpec& quad) {
    std::vector<double> xs = grid.points();
    auto v = integrate_pointwise(xs, psi_integrand, 0.0, 1.0, quad, kUnderflowRadius);
    for (double& e : v) e *= cube_mass_factor();
    return RealField(grid, std::move(v), 1.0);
}

RealField psi_field(const ProfileRequest& request, const QuadratureSpec& quad) {
    request.validate();
    const double t = request.time;
    auto v = integrate_pointwise(scaled_points(request.grid, t), psi_integrand, 0.0, 1.0, quad, kUnderflowRadius);
    for (double& e : v) e *= cube_mass_factor() / t;
    return RealField(request.grid, std::move(v), t);
}

RealField log_correction_field(const ProfileRequest& request) {
    request.validate();
    RealField f = heat_kernel_field(request.grid, request.time, 1);
    f *= cube_mass_factor() * std::log(request.time);
    return f;
}

RealField duhamel_v_field(double t, const Grid1D& grid, const QuadratureSpec& quad) {
    if (!(t >= 1.0)) throw std::invalid_argument("v(x, t) is defined for t >= 1");
    if (t == 1.0) return RealField::zeros(grid, t);
    // tau = e^sigma removes the 1/tau weight.
    auto integrand = [t](double x, double sigma) {
        return heat_kernel(x, t - 2.0 * std::exp(sigma) / 3.0, 1);
    };
    auto v = integrate_pointwise(grid.points(), integrand, 0.0, std::log(t), quad,
                                kUnderflowRadius * std::sqrt(t));
    for (double& e : v) e *= cube_mass_factor();
    return RealField(grid, std::move(v), t);
}

RealField v_minus_V_rescaled_field(double t, const Grid1D& grid, const QuadratureSpec& quad) {
    if (!(t >= 1.0)) throw std::invalid_argument("v - V is defined for t >= 1");
    if (t == 1.0) return RealField::zeros(grid, t);
    auto v = integrate_pointwise(scaled_points(grid, t), psi_integrand, 1.0 / t, 1.0, quad, kUnderflowRadius);
    for (double& e : v) e *= cube_mass_factor() / t;
    return RealField(grid, std::move(v), t);
}

RealField expansion_field(const ProfileRequest& request) {
    request.validate();
    const double t = request.time;
    const double alpha = request.params.alpha;
    const Regime regime = request.params.regime;
    const int K = series_order(regime);
    const double M = request.mass;
    const double m = request.first_moment;
    const bool resonant = regime.kind == Regime::Case::II;
    return heat_symbol_field(request.grid, t, [=](double xi) {
        std::complex<double> s = disp_series(xi, t, alpha, K) * std::complex<double>(M, -m * xi);
        if (resonant) s += M * resonant_symbol(xi, t, alpha, regime.n);
        return s;
    });
}

RealField leading_mass_sum_field(const ProfileRequest& request) {
    request.validate();
    const double t = request.time;
    const double alpha = request.params.alpha;
    const int K = series_order(request.params.regime);
    const double M = request.mass;
    return heat_symbol_field(request.grid, t,
                             [=](double xi) { return M * disp_series(xi, t, alpha, K); });
}

RealField resonant_term_field(const ProfileRequest& request) {
    request.validate();
    const Regime regime = request.params.regime;
    if (regime.kind != Regime::Case::II) return RealField::zeros(request.grid, request.time);
    const double t = request.time;
    const double alpha = request.params.alpha;
    const double M = request.mass;
    return heat_symbol_field(request.grid, t,
                             [=](double xi) { return M * resonant_symbol(xi, t, alpha, regime.n); });
}

RealField c_star_profile(const ProfileRequest& request, const QuadratureSpec& quad) {
    request.validate();
    const double beta = request.params.beta;
    const double M = request.mass;
    RealField f = heat_kernel_field(request.grid, 1.0, 1);
    f *= beta * request.duhamel_mass / 3.0;
    f.axpy(beta * M * M * M / 3.0, psi_star_field(request.grid, quad));
    return f;
}

RealField c_dagger_profile(const ProfileRequest& request, const QuadratureSpec& quad) {
    RealField f = c_star_profile(request, quad);
    f.axpy(request.first_moment, heat_kernel_field(request.grid, 1.0, 1));
    ProfileRequest at_one = request;
    at_one.time = 1.0;
    f -= resonant_term_field(at_one).with_time(f.time());
    return f;
}

LimitConstants limit_constants(const ProfileRequest& request, double p, const QuadratureSpec& quad) {
    return {lp_norm(c_star_profile(request, quad), p), lp_norm(c_dagger_profile(request, quad), p)};
}

}  // namespace fracdisp
