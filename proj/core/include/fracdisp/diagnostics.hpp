#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fracdisp/field.hpp"
#include "fracdisp/observables.hpp"
#include "fracdisp/profiles.hpp"
#include "fracdisp/quadrature.hpp"
#include "fracdisp/solver.hpp"

namespace fracdisp {

/// (1/2)(1 - 1/p) + 1/2, the exponent of every second-order limit statement.
double optimal_scale_exponent(double p) noexcept;

// Residual fields. Each needs a trajectory with initial data and a snapshot at t > 1
// (the corollary and reduced-limit fields accept any t > 0).

/// I[u] + beta M^3/(12 sqrt3 pi) (log t) d_x G + (beta script-M/3) d_x G + (beta M^3/3) Psi.
RealField duhamel_residual_field(const Trajectory& trajectory, const Moments& moments, double t,
                                 const QuadratureSpec& quad = {});

/// u - S_alpha(t) u0 + beta M^3/(12 sqrt3 pi) (log t) d_x G.
RealField first_order_residual_field(const Trajectory& trajectory, const Moments& moments, double t);

/// u - expansion_field + log term + (beta script-M/3) d_x G + (beta M^3/3) Psi.
RealField corollary_residual_field(const Trajectory& trajectory, const Moments& moments, double t,
                                   const QuadratureSpec& quad = {});

/// u - leading_mass_sum_field + log term (unscaled).
RealField reduced_limit_field(const Trajectory& trajectory, const Moments& moments, double t);

double residual_duhamel(const Trajectory& trajectory, const Moments& moments, double t, double p,
                        const QuadratureSpec& quad = {});
double residual_first_order(const Trajectory& trajectory, const Moments& moments, double t, double p);
double residual_corollary(const Trajectory& trajectory, const Moments& moments, double t, double p,
                          const QuadratureSpec& quad = {});
/// t^{optimal_scale_exponent(p)} ||reduced_limit_field||_p.
double reduced_limit_value(const Trajectory& trajectory, const Moments& moments, double t, double p);

/// d_x^l (S_alpha(t) u0 - M G(., t)).
RealField semigroup_gap_field(const RealField& u0, double t, const ModelParams& params, int l = 0);

/// The ProfileRequest matching a trajectory snapshot.
ProfileRequest profile_request(const Trajectory& trajectory, const Moments& moments, double t);

enum class LogFactor { None, DivideByLogT };

struct DecaySample {
    double t;
    double raw;    ///< the measured norm
    double value;  ///< t^scale_exponent * raw, divided by log t if requested
};

struct DecaySeries {
    std::string label;
    double p = 2.0;
    double scale_exponent = 0.0;
    LogFactor log_factor = LogFactor::None;
    std::vector<DecaySample> samples;
};

struct FitWindow {
    double t_min;
    double t_max;
};

struct RateFit {
    double slope = 0.0;
    double intercept = 0.0;
    double fit_residual = 0.0;  ///< RMS in log-log
    FitWindow window{0.0, 0.0};
    std::size_t points = 0;
    std::size_t excluded = 0;  ///< nonpositive values dropped from the window
};

/// Evaluates `raw_norm(t)` at each time. Times must be strictly increasing
/// and, with DivideByLogT, greater than 1.
DecaySeries collect_series(const std::function<double(double)>& raw_norm, const std::vector<double>& times,
                           double p, double scale_exponent, LogFactor log_factor = LogFactor::None,
                           std::string label = {});

/// Least squares in (log t, log value). The default window is the last decade
/// of the series. Needs >= 5 usable points (std::invalid_argument otherwise).
RateFit rate_fit(const DecaySeries& series, std::optional<FitWindow> window = std::nullopt);

/// Minimum number of points a rate fit accepts.
inline constexpr std::size_t kMinFitPoints = 5;

}  // namespace fracdisp
