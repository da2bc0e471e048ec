#pragma once

#include <vector>

#include "fracdisp/field.hpp"
#include "fracdisp/solver.hpp"
#include "fracdisp/spectral.hpp"

namespace fracdisp {

struct FirstMoments {
    double M = 0.0;  ///< int u0
    double m = 0.0;  ///< int x u0
};

/// Rectangle-rule M and m. Throws TailMassError when the tail mass fraction
/// exceeds `tail_threshold`, since m is sensitive to truncation.
FirstMoments compute_M_m(const RealField& u0, double tail_threshold = kTailMassThreshold);

/// rho = u^3 - (M G(., t))^3 at the field's time (> 0).
RealField rho_field(const RealField& u, double M);

/// Moments plus the time-integrated nonlinear mass
///   script M = int_0^1 int u^3 + int_1^inf int (u^3 - (MG)^3).
struct Moments {
    double M = 0.0;
    double m = 0.0;
    double mathcal_M = 0.0;
    double mathcal_M0 = 0.0;
    double mathcal_M1 = 0.0;
    double T_max = 0.0;
    /// Integral over (T_max, inf) of the power-law fit A tau^{-gamma} to |a|.
    /// It bounds the truncation error and is not added to mathcal_M1.
    double tail_estimate = 0.0;
    bool tail_available = true;
    double tail_exponent = 0.0;  ///< fitted gamma
    double tail_amplitude = 0.0; ///< fitted A
};

/// a(tau) = int u^3 dy - M^3 / (4 sqrt(3) pi tau) sampled along the trajectory.
struct MassSample {
    double t;
    double value;
};

/// int u^3 dy along the trajectory: the per-step series when recorded,
/// otherwise the snapshots.
std::vector<MassSample> cube_series(const Trajectory& trajectory);

/// a(tau) for tau >= 1, built from cube_series.
std::vector<MassSample> rho_integral_series(const Trajectory& trajectory, double M);

/// Trapezoid quadrature of the cube series; the trajectory must cover [0, T_max]
/// and sample t = 1. Moments::m is left at 0 for the caller to fill.
/// The tail fit uses |a| on [T_max/10, T_max]; when it does not decay faster
/// than 1/tau the tail is flagged unavailable and tail_estimate is +inf.
Moments compute_mathcal_M(const Trajectory& trajectory, double M, double T_max);

/// int_1^T a(tau) d tau for each T (ascending, each within the trajectory).
std::vector<double> partial_mass_integrals(const Trajectory& trajectory, double M,
                                           const std::vector<double>& T);

}  // namespace fracdisp
