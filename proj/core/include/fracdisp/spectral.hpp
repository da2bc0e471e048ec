#pragma once

#include <complex>
#include <functional>

#include "fracdisp/field.hpp"
#include "fracdisp/params.hpp"

namespace fracdisp {

/// Forward DFT of a real field (full spectrum, FFT order, unnormalized).
SpectralCoeffs transform(const RealField& field);

struct InverseResult {
    RealField field;
    /// max_j |Im f_j| / max(max_j |Re f_j|, tiny): how far the spectrum was from Hermitian.
    double imaginary_residue;
};

/// Inverse DFT returning the real part; the imaginary residue is reported.
InverseResult inverse_transform_checked(const SpectralCoeffs& coeffs, double time = 0.0);
RealField inverse_transform(const SpectralCoeffs& coeffs, double time = 0.0);

/// Fourier symbol m(xi). Symbols handed to apply_multiplier must satisfy
/// m(-xi) = conj(m(xi)) so that real fields map to real fields.
using Symbol = std::function<std::complex<double>(double xi)>;

/// F^{-1}[m * F[f]] on the grid. The unpaired Nyquist coefficient is zeroed
/// whenever m is not real there (odd symbols have no real-symmetric partner).
RealField apply_multiplier(const RealField& field, const Symbol& symbol);

/// Multiplies full-spectrum coefficients by m with the same Nyquist rule.
SpectralCoeffs apply_multiplier(const SpectralCoeffs& coeffs, const Symbol& symbol);

/// Linear symbol -xi^2 + i |xi|^alpha xi of u_t = u_xx + D^alpha d_x u.
std::complex<double> linear_symbol(double xi, double alpha) noexcept;

/// |xi|^alpha with the removable value 0 at xi = 0.
double abs_pow(double xi, double alpha) noexcept;

/// S_alpha(t) * f: multiplier exp(-t xi^2 + i t |xi|^alpha xi). Advances the time stamp by t.
RealField apply_semigroup(const RealField& field, double t, const ModelParams& params);

/// (D^alpha d_x)^k f: multiplier (|xi|^alpha i xi)^k.
RealField frac_disp_power(const RealField& field, int k, const ModelParams& params);

/// d_x^l f: multiplier (i xi)^l.
RealField spatial_derivative(const RealField& field, int l);

enum class SupMode {
    GridMax,          ///< max over samples, a lower bound for the true supremum
    ParabolaRefined,  ///< three-point parabola through the largest sample
};

/// (sum |f_j|^p dx)^{1/p} for finite p, max |f_j| for p = infinity.
double lp_norm(const RealField& field, double p, SupMode sup_mode = SupMode::GridMax);

/// Rectangle-rule integral sum f_j dx.
double integral(const RealField& field);

/// Fraction of the L^1 mass located at |x| > L/2; 0 for the zero field.
double tail_mass_fraction(const RealField& field);

/// Default threshold for tail_mass_fraction beyond which whole-line
/// quantities are not trusted.
inline constexpr double kTailMassThreshold = 1e-10;

}  // namespace fracdisp
