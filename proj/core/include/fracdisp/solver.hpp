#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fracdisp/field.hpp"
#include "fracdisp/fft.hpp"
#include "fracdisp/params.hpp"

namespace fracdisp {

/// dt = 0.5 dx capped at 0.05.
double default_time_step(const Grid1D& grid) noexcept;

struct SolverConfig {
    ModelParams params;
    Grid1D grid{10.0, 16};
    double dt = 0.05;
    double t_end = 1.0;
    std::vector<double> snapshot_times;
    double dealias = 2.0;  ///< padded size is dealias * N rounded up to even
    double smallness_threshold = 0.5;
    bool record_cube_series = true;

    void validate() const;
};

/// One sample of t -> int u^3 dx.
struct CubeSample {
    double t;
    double value;
};

struct Trajectory {
    ModelParams params;
    std::optional<RealField> initial;  ///< u0 at t = 0
    std::vector<double> snapshot_times;
    std::vector<RealField> snapshots;
    std::vector<double> conserved_mass_series;  ///< int u dx at each snapshot
    std::vector<CubeSample> nonlinear_series;   ///< every step when recorded
    std::vector<std::string> warnings;
    std::size_t step_count = 0;

    /// Snapshot whose time matches t to 1e-12 relative; throws std::out_of_range.
    const RealField& at(double t) const;
    bool has(double t) const noexcept;
};

/// Integrating-factor RK4 in Fourier space with the linear propagator exp(h Lambda)
/// applied exactly. The nonlinearity -(beta/3) d_x(u^3) is evaluated on a zero-padded
/// grid, which is alias-free for cubes at the default 2x padding.
class SpectralStepper {
public:
    SpectralStepper(const ModelParams& params, const Grid1D& grid, double dealias = 2.0);

    /// Loads a field; its unpaired Nyquist coefficient is dropped.
    void load(const RealField& u);
    /// Advances by h and returns int u^3 dx of the state before the step.
    double step(double h);
    /// Replaces the state by exp(h Lambda) applied to it (exact when beta = 0).
    void propagate_linear(double h);

    RealField state() const;
    double time() const noexcept { return time_; }
    /// int u^3 dx of the current state (exact on the padded grid).
    double cube_integral();
    bool finite() const noexcept;
    std::size_t padded_size() const noexcept { return padded_; }

    /// Half-spectrum of -(beta/3) d_x(u^3) for the half-spectrum `u_hat`;
    /// stores int u^3 dx in `cube`.
    void rhs(const std::vector<std::complex<double>>& u_hat, std::vector<std::complex<double>>& out,
             double& cube);

private:
    void set_exponentials(double h);

    ModelParams params_;
    Grid1D grid_;
    std::size_t padded_;
    RealFft fft_;
    RealFft padded_fft_;
    double time_ = 0.0;
    double cached_h_ = -1.0;
    std::vector<double> xi_;
    std::vector<std::complex<double>> lambda_;
    std::vector<std::complex<double>> e_full_, e_half_;
    std::vector<std::complex<double>> u_hat_;
    std::vector<std::complex<double>> k1_, k2_, k3_, k4_, tmp_;
    std::vector<std::complex<double>> pad_hat_;
    std::vector<double> pad_real_;
};

/// Evolves u0 to config.t_end, storing snapshots at config.snapshot_times.
///
/// Fixed steps of config.dt, shortened only to land on snapshot times.
/// Throws BlowUpError on any non-finite value. Warns (in Trajectory::warnings)
/// when the data exceed the smallness threshold or a snapshot carries
/// tail mass above kTailMassThreshold.
Trajectory evolve(const RealField& u0, const SolverConfig& config);

/// -(beta/3) d_x(u^3) with dealiased products.
RealField nonlinear_rhs(const RealField& field, const ModelParams& params, double dealias = 2.0);

/// I[u](t) = u(t) - S_alpha(t) u0 from a stored snapshot.
RealField duhamel_term(const Trajectory& trajectory, const RealField& u0, double t);
/// Same with the trajectory's own initial data.
RealField duhamel_term(const Trajectory& trajectory, double t);

/// ||u||_{H^1} + ||u||_{L^1} on the grid.
double smallness_norm(const RealField& u);

}  // namespace fracdisp
