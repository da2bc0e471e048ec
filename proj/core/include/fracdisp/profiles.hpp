#pragma once

#include "fracdisp/field.hpp"
#include "fracdisp/heat_kernel.hpp"
#include "fracdisp/params.hpp"
#include "fracdisp/quadrature.hpp"

namespace fracdisp {

/// 1 / (4 sqrt(3) pi): G^3(y, t) = cube_mass_factor() * t^{-1} G(y, t/3),
/// so int G^3(y, t) dy = cube_mass_factor() / t.
double cube_mass_factor() noexcept;

/// beta M^3 / (12 sqrt(3) pi), the coefficient of (log t) d_x G in the
/// first-order Duhamel asymptotics. For beta = 3 it equals M^3 / (4 sqrt(3) pi).
double log_coefficient(double beta, double mass) noexcept;

/// Gaussian-difference kernel F_*(y) = e^{-3y^2/4} / (8 pi^{3/2}) - e^{-y^2/4} / (8 sqrt(3) pi^{3/2}).
double fstar(double y) noexcept;

/// F(y, s) = s^{-3/2} F_*(y / sqrt(s)), s > 0.
double f_scaled(double y, double s);

/// Psi_*(x) = d/dx int_0^1 (G(1-s) * F(s))(x) ds.
///
/// Uses the Gaussian collapse G(1-s) * F(s) = c s^{-1} [G(., 1-2s/3) - G(., 1)]
/// with c = cube_mass_factor(), so that
///   Psi_*(x) = c int_0^1 s^{-1} [d_x G(x, 1-2s/3) - d_x G(x, 1)] ds.
/// The integrand tends to -(2/3) d_x^3 G(x, 1) as s -> 0.
double psi_star(double x, const QuadratureSpec& quad = {});

/// Same integrand restricted to s in [s_lower, 1].
double psi_star_partial(double x, double s_lower, const QuadratureSpec& quad = {});

/// Inputs shared by the profile constructors.
struct ProfileRequest {
    ModelParams params;
    double mass = 0.0;          ///< M = int u0
    double first_moment = 0.0;  ///< m = int x u0
    double duhamel_mass = 0.0;  ///< script M, the time-integrated nonlinear mass
    double time = 1.0;
    Grid1D grid{10.0, 16};

    void validate() const;
};

/// Psi(x, t) = t^{-1} Psi_*(x / sqrt(t)) on the request grid.
RealField psi_field(const ProfileRequest& request, const QuadratureSpec& quad = {});

/// Psi_* sampled on an arbitrary grid (t = 1).
RealField psi_star_field(const Grid1D& grid, const QuadratureSpec& quad = {});

/// V(x, t) = c (log t) d_x G(x, t); callers scale by beta M^3 / 3.
RealField log_correction_field(const ProfileRequest& request);

/// v(x, t) = int_1^t d_x G(t - tau) * G^3(tau) dtau for t > 1, through the
/// collapsed form c int_1^t tau^{-1} d_x G(x, t - 2 tau/3) dtau.
RealField duhamel_v_field(double t, const Grid1D& grid, const QuadratureSpec& quad = {});

/// v - V through its self-similar form
///   t^{-1/2} d_x ( int_{1/t}^1 (G(1-s) * F(s))(x / sqrt(t)) ds ).
RealField v_minus_V_rescaled_field(double t, const Grid1D& grid, const QuadratureSpec& quad = {});

/// Linear large-time expansion of S_alpha(t) * u0 for the request's regime:
///   I:       M G - m d_x G
///   II(N):   sum_{k<N} (t^k/k!) (D^a d_x)^k {M G - m d_x G} + (M/N!) (t D^a d_x)^N G
///   III(N):  sum_{k<=N} (t^k/k!) (D^a d_x)^k {M G - m d_x G}
/// evaluated spectrally from the exact Gaussian spectrum.
RealField expansion_field(const ProfileRequest& request);

/// Mass-only leading sum used by the limit-constant statements:
///   I: M G,   II(N): M sum_{k<N} (t^k/k!) (D^a d_x)^k G,   III(N): M sum_{k<=N} (...).
RealField leading_mass_sum_field(const ProfileRequest& request);

/// (M / N!) (t D^a d_x)^N G(., t) for regime II(N); zero field otherwise.
RealField resonant_term_field(const ProfileRequest& request);

/// (beta script-M / 3) d_x G(., 1) + (beta M^3 / 3) Psi_*.
RealField c_star_profile(const ProfileRequest& request, const QuadratureSpec& quad = {});

/// (m + beta script-M / 3) d_x G(., 1) + (beta M^3 / 3) Psi_*, minus the
/// resonant term at t = 1 in regime II(N).
RealField c_dagger_profile(const ProfileRequest& request, const QuadratureSpec& quad = {});

struct LimitConstants {
    double c_star = 0.0;
    double c_dagger = 0.0;
};

/// L^p norms of c_star_profile and c_dagger_profile on the request grid.
LimitConstants limit_constants(const ProfileRequest& request, double p,
                               const QuadratureSpec& quad = {});

}  // namespace fracdisp
