#include "fracdisp/solver.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "fracdisp/errors.hpp"
#include "fracdisp/spectral.hpp"

namespace fracdisp {

namespace {

std::size_t padded_length(std::size_t n, double dealias) {
    auto m = static_cast<std::size_t>(std::ceil(dealias * static_cast<double>(n)));
    if (m % 2 != 0) ++m;
    return m;
}

bool same_time(double a, double b) { return std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(b)); }

}  // namespace

double default_time_step(const Grid1D& grid) noexcept { return std::min(0.5 * grid.dx(), 0.05); }

void SolverConfig::validate() const {
    if (!(dt > 0.0) || !std::isfinite(dt)) throw std::invalid_argument("dt must be positive");
    if (!(t_end >= 0.0) || !std::isfinite(t_end)) throw std::invalid_argument("t_end must be >= 0");
    if (!(dealias >= 1.5)) throw std::invalid_argument("dealias factor must be >= 3/2");
    if (!std::is_sorted(snapshot_times.begin(), snapshot_times.end())) {
        throw std::invalid_argument("snapshot times must be sorted");
    }
    for (double t : snapshot_times) {
        if (!(t >= 0.0 && t <= t_end)) throw std::invalid_argument("snapshot times must lie in [0, t_end]");
    }
}

bool Trajectory::has(double t) const noexcept {
    return std::any_of(snapshot_times.begin(), snapshot_times.end(),
                       [t](double s) { return same_time(s, t); });
}

const RealField& Trajectory::at(double t) const {
    for (std::size_t i = 0; i < snapshot_times.size(); ++i) {
        if (same_time(snapshot_times[i], t)) return snapshots[i];
    }
    std::ostringstream msg;
    msg << "no snapshot at t = " << t;
    throw std::out_of_range(msg.str());
}

SpectralStepper::SpectralStepper(const ModelParams& params, const Grid1D& grid, double dealias)
    : params_(params),
      grid_(grid),
      padded_(padded_length(grid.size(), dealias)),
      fft_(grid.size()),
      padded_fft_(padded_) {
    if (!(dealias >= 1.5)) throw std::invalid_argument("dealias factor must be >= 3/2");
    const std::size_t h = fft_.spectrum_size();
    xi_.resize(h);
    lambda_.resize(h);
    for (std::size_t i = 0; i < h; ++i) {
        xi_[i] = grid.wavenumber(i);
        lambda_[i] = linear_symbol(xi_[i], params.alpha);
    }
    e_full_.resize(h);
    e_half_.resize(h);
    u_hat_.assign(h, 0.0);
    k1_.resize(h);
    k2_.resize(h);
    k3_.resize(h);
    k4_.resize(h);
    tmp_.resize(h);
    pad_hat_.resize(padded_fft_.spectrum_size());
    pad_real_.resize(padded_);
}

void SpectralStepper::load(const RealField& u) {
    if (!(u.grid() == grid_)) throw std::invalid_argument("field grid does not match stepper grid");
    fft_.forward(u.values(), u_hat_);
    u_hat_[grid_.nyquist_index()] = 0.0;
    time_ = u.time();
}

void SpectralStepper::set_exponentials(double h) {
    if (h == cached_h_) return;
    for (std::size_t i = 0; i < lambda_.size(); ++i) {
        e_full_[i] = std::exp(h * lambda_[i]);
        e_half_[i] = std::exp(0.5 * h * lambda_[i]);
    }
    e_full_[grid_.nyquist_index()] = 0.0;
    e_half_[grid_.nyquist_index()] = 0.0;
    cached_h_ = h;
}

void SpectralStepper::rhs(const std::vector<std::complex<double>>& u_hat,
                          std::vector<std::complex<double>>& out, double& cube) {
    const std::size_t nyq = grid_.nyquist_index();
    const double n = static_cast<double>(grid_.size());
    std::fill(pad_hat_.begin(), pad_hat_.end(), std::complex<double>(0.0));
    for (std::size_t i = 0; i < nyq; ++i) pad_hat_[i] = u_hat[i] / n;
    padded_fft_.backward(pad_hat_, pad_real_);
    for (double& v : pad_real_) v = v * v * v;
    padded_fft_.forward(pad_real_, pad_hat_);

    const double m = static_cast<double>(padded_);
    cube = (2.0 * grid_.half_width() / m) * pad_hat_[0].real();
    const double c = -params_.beta / 3.0 * (n / m);
    for (std::size_t i = 0; i < nyq; ++i) out[i] = c * std::complex<double>(0.0, xi_[i]) * pad_hat_[i];
    out[nyq] = 0.0;
}

double SpectralStepper::cube_integral() {
    double cube = 0.0;
    rhs(u_hat_, tmp_, cube);
    return cube;
}

double SpectralStepper::step(double h) {
    if (!(h > 0.0)) throw std::invalid_argument("step size must be positive");
    set_exponentials(h);
    const std::size_t n = u_hat_.size();
    double cube = 0.0;
    double unused = 0.0;

    rhs(u_hat_, k1_, cube);
    for (std::size_t i = 0; i < n; ++i) {
        k1_[i] *= h;
        tmp_[i] = e_half_[i] * (u_hat_[i] + 0.5 * k1_[i]);
    }
    rhs(tmp_, k2_, unused);
    for (std::size_t i = 0; i < n; ++i) {
        k2_[i] *= h;
        tmp_[i] = e_half_[i] * u_hat_[i] + 0.5 * k2_[i];
    }
    rhs(tmp_, k3_, unused);
    for (std::size_t i = 0; i < n; ++i) {
        k3_[i] *= h;
        tmp_[i] = e_full_[i] * u_hat_[i] + e_half_[i] * k3_[i];
    }
    rhs(tmp_, k4_, unused);
    for (std::size_t i = 0; i < n; ++i) {
        k4_[i] *= h;
        u_hat_[i] = e_full_[i] * u_hat_[i] +
                    (e_full_[i] * k1_[i] + 2.0 * e_half_[i] * (k2_[i] + k3_[i]) + k4_[i]) / 6.0;
    }
    time_ += h;
    return cube;
}

void SpectralStepper::propagate_linear(double h) {
    if (!(h >= 0.0)) throw std::invalid_argument("propagation time must be nonnegative");
    for (std::size_t i = 0; i < u_hat_.size(); ++i) u_hat_[i] *= std::exp(h * lambda_[i]);
    u_hat_[grid_.nyquist_index()] = 0.0;
    time_ += h;
}

RealField SpectralStepper::state() const {
    std::vector<std::complex<double>> scratch(u_hat_);
    std::vector<double> out(grid_.size());
    fft_.backward(scratch, out);
    const double scale = 1.0 / static_cast<double>(grid_.size());
    for (double& v : out) v *= scale;
    return RealField(grid_, std::move(out), time_);
}

bool SpectralStepper::finite() const noexcept {
    return std::all_of(u_hat_.begin(), u_hat_.end(), [](const std::complex<double>& z) {
        return std::isfinite(z.real()) && std::isfinite(z.imag());
    });
}

double smallness_norm(const RealField& u) {
    const double l2 = lp_norm(u, 2.0);
    const double d2 = lp_norm(spatial_derivative(u, 1), 2.0);
    return std::sqrt(l2 * l2 + d2 * d2) + lp_norm(u, 1.0);
}

Trajectory evolve(const RealField& u0, const SolverConfig& config) {
    config.validate();
    if (!(u0.grid() == config.grid)) throw std::invalid_argument("initial data grid does not match config grid");

    Trajectory traj;
    traj.params = config.params;
    traj.initial = u0.with_time(0.0);
    const double size0 = smallness_norm(u0);
    if (size0 > config.smallness_threshold) {
        std::ostringstream w;
        w << "initial data size " << size0 << " exceeds smallness threshold " << config.smallness_threshold;
        traj.warnings.push_back(w.str());
    }

    SpectralStepper stepper(config.params, config.grid, config.dealias);
    stepper.load(u0.with_time(0.0));

    auto take_snapshot = [&](double t) {
        RealField s = stepper.state().with_time(t);
        const double tail = tail_mass_fraction(s);
        if (tail > kTailMassThreshold) {
            std::ostringstream w;
            w << "tail mass fraction " << tail << " at t = " << t << " exceeds " << kTailMassThreshold;
            traj.warnings.push_back(w.str());
        }
        traj.snapshot_times.push_back(t);
        traj.conserved_mass_series.push_back(integral(s));
        traj.snapshots.push_back(std::move(s));
    };

    const bool linear_only = config.params.beta == 0.0 && !config.record_cube_series;
    std::vector<double> targets = config.snapshot_times;
    if (targets.empty() || !same_time(targets.back(), config.t_end)) targets.push_back(config.t_end);

    double t = 0.0;
    double last_good = 0.0;
    std::size_t next_snapshot = 0;
    auto snapshot_due = [&](double target) {
        while (next_snapshot < config.snapshot_times.size() &&
               same_time(config.snapshot_times[next_snapshot], target)) {
            take_snapshot(config.snapshot_times[next_snapshot]);
            ++next_snapshot;
        }
    };

    for (double target : targets) {
        if (linear_only) {
            if (target > t) {
                stepper.propagate_linear(target - t);
                ++traj.step_count;
                t = target;
            }
        } else {
            while (t < target && !same_time(t, target)) {
                const double remaining = target - t;
                const double h = remaining <= config.dt * (1.0 + 1e-9) ? remaining : config.dt;
                const double cube = stepper.step(h);
                if (config.record_cube_series) traj.nonlinear_series.push_back({t, cube});
                ++traj.step_count;
                if (!stepper.finite()) {
                    throw BlowUpError("non-finite values in the solution", last_good);
                }
                t = (h == remaining) ? target : t + h;
                last_good = t;
            }
            t = target;
        }
        snapshot_due(target);
    }
    if (config.record_cube_series) traj.nonlinear_series.push_back({t, stepper.cube_integral()});
    return traj;
}

RealField nonlinear_rhs(const RealField& field, const ModelParams& params, double dealias) {
    SpectralStepper stepper(params, field.grid(), dealias);
    const RealFft fft(field.size());
    std::vector<std::complex<double>> u_hat(fft.spectrum_size());
    fft.forward(field.values(), u_hat);
    u_hat[field.grid().nyquist_index()] = 0.0;
    std::vector<std::complex<double>> out(u_hat.size());
    double cube = 0.0;
    stepper.rhs(u_hat, out, cube);
    std::vector<double> values(field.size());
    fft.backward(out, values);
    const double scale = 1.0 / static_cast<double>(field.size());
    for (double& v : values) v *= scale;
    return RealField(field.grid(), std::move(values), field.time());
}

RealField duhamel_term(const Trajectory& trajectory, const RealField& u0, double t) {
    RealField out = trajectory.at(t);
    out -= apply_semigroup(u0.with_time(0.0), t, trajectory.params);
    return out;
}

RealField duhamel_term(const Trajectory& trajectory, double t) {
    if (!trajectory.initial) throw std::invalid_argument("trajectory has no initial data");
    return duhamel_term(trajectory, *trajectory.initial, t);
}

}  // namespace fracdisp
