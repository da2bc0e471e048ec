#include "fracdisp/diagnostics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "fracdisp/fit.hpp"
#include "fracdisp/heat_kernel.hpp"
#include "fracdisp/spectral.hpp"

namespace fracdisp {

namespace {

void require_late_time(double t) {
    if (!(t > 1.0)) throw std::invalid_argument("residual requires t > 1");
}

// beta M^3/(12 sqrt3 pi) (log t) d_x G(., t).
RealField log_term(const Grid1D& grid, double beta, double M, double t) {
    RealField f = heat_kernel_field(grid, t, 1);
    f *= log_coefficient(beta, M) * std::log(t);
    return f;
}

// (beta script-M/3) d_x G + (beta M^3/3) Psi at time t.
RealField second_order_profile(const ProfileRequest& req, const QuadratureSpec& quad) {
    const double beta = req.params.beta;
    const double M = req.mass;
    RealField f = heat_kernel_field(req.grid, req.time, 1);
    f *= beta * req.duhamel_mass / 3.0;
    if (beta != 0.0 && M != 0.0) f.axpy(beta * M * M * M / 3.0, psi_field(req, quad));
    return f;
}

}  // namespace

double optimal_scale_exponent(double p) noexcept {
    const double inv = std::isinf(p) ? 0.0 : 1.0 / p;
    return 0.5 * (1.0 - inv) + 0.5;
}

ProfileRequest profile_request(const Trajectory& trajectory, const Moments& moments, double t) {
    ProfileRequest r;
    r.params = trajectory.params;
    r.mass = moments.M;
    r.first_moment = moments.m;
    r.duhamel_mass = moments.mathcal_M;
    r.time = t;
    r.grid = trajectory.at(t).grid();
    return r;
}

RealField first_order_residual_field(const Trajectory& trajectory, const Moments& moments, double t) {
    require_late_time(t);
    RealField f = duhamel_term(trajectory, t);
    f += log_term(f.grid(), trajectory.params.beta, moments.M, t);
    return f;
}

RealField duhamel_residual_field(const Trajectory& trajectory, const Moments& moments, double t,
                                 const QuadratureSpec& quad) {
    RealField f = first_order_residual_field(trajectory, moments, t);
    f += second_order_profile(profile_request(trajectory, moments, t), quad);
    return f;
}

RealField corollary_residual_field(const Trajectory& trajectory, const Moments& moments, double t,
                                   const QuadratureSpec& quad) {
    if (!(t > 0.0)) throw std::invalid_argument("corollary residual requires t > 0");
    const ProfileRequest req = profile_request(trajectory, moments, t);
    RealField f = trajectory.at(t);
    f -= expansion_field(req);
    f += log_term(f.grid(), req.params.beta, moments.M, t);
    f += second_order_profile(req, quad);
    return f;
}

RealField reduced_limit_field(const Trajectory& trajectory, const Moments& moments, double t) {
    if (!(t > 0.0)) throw std::invalid_argument("reduced limit requires t > 0");
    const ProfileRequest req = profile_request(trajectory, moments, t);
    RealField f = trajectory.at(t);
    f -= leading_mass_sum_field(req);
    f += log_term(f.grid(), req.params.beta, moments.M, t);
    return f;
}

double residual_duhamel(const Trajectory& trajectory, const Moments& moments, double t, double p,
                        const QuadratureSpec& quad) {
    return lp_norm(duhamel_residual_field(trajectory, moments, t, quad), p);
}

double residual_first_order(const Trajectory& trajectory, const Moments& moments, double t, double p) {
    return lp_norm(first_order_residual_field(trajectory, moments, t), p);
}

double residual_corollary(const Trajectory& trajectory, const Moments& moments, double t, double p,
                          const QuadratureSpec& quad) {
    return lp_norm(corollary_residual_field(trajectory, moments, t, quad), p);
}

double reduced_limit_value(const Trajectory& trajectory, const Moments& moments, double t, double p) {
    return std::pow(t, optimal_scale_exponent(p)) * lp_norm(reduced_limit_field(trajectory, moments, t), p);
}

RealField semigroup_gap_field(const RealField& u0, double t, const ModelParams& params, int l) {
    if (!(t > 0.0)) throw std::invalid_argument("semigroup gap requires t > 0");
    RealField f = apply_semigroup(u0.with_time(0.0), t, params);
    f.axpy(-integral(u0), heat_kernel_field(u0.grid(), t, 0));
    return spatial_derivative(f, l);
}

DecaySeries collect_series(const std::function<double(double)>& raw_norm, const std::vector<double>& times,
                           double p, double scale_exponent, LogFactor log_factor, std::string label) {
    DecaySeries s;
    s.label = std::move(label);
    s.p = p;
    s.scale_exponent = scale_exponent;
    s.log_factor = log_factor;
    for (std::size_t i = 0; i < times.size(); ++i) {
        const double t = times[i];
        if (!(t > 0.0)) throw std::invalid_argument("series times must be positive");
        if (i > 0 && !(t > times[i - 1])) throw std::invalid_argument("series times must increase strictly");
        if (log_factor == LogFactor::DivideByLogT && !(t > 1.0)) {
            throw std::invalid_argument("log factor needs t > 1");
        }
        const double raw = raw_norm(t);
        if (!std::isfinite(raw)) throw std::invalid_argument("series value is not finite");
        double v = std::pow(t, scale_exponent) * raw;
        if (log_factor == LogFactor::DivideByLogT) v /= std::log(t);
        s.samples.push_back({t, raw, v});
    }
    return s;
}

RateFit rate_fit(const DecaySeries& series, std::optional<FitWindow> window) {
    if (series.samples.empty()) throw std::invalid_argument("empty series");
    FitWindow w = window.value_or(FitWindow{series.samples.back().t / 10.0, series.samples.back().t});
    RateFit r;
    r.window = w;
    std::vector<double> lx, ly;
    const double slack = 1e-12;
    for (const auto& s : series.samples) {
        if (s.t < w.t_min * (1.0 - slack) || s.t > w.t_max * (1.0 + slack)) continue;
        if (!(s.value > 0.0)) {
            ++r.excluded;
            continue;
        }
        lx.push_back(std::log(s.t));
        ly.push_back(std::log(s.value));
    }
    if (lx.size() < kMinFitPoints) {
        throw std::invalid_argument("rate fit needs at least 5 positive samples in the window");
    }
    const LineFit f = least_squares(lx, ly);
    r.slope = f.slope;
    r.intercept = f.intercept;
    r.fit_residual = f.rms_residual;
    r.points = lx.size();
    return r;
}

}  // namespace fracdisp
