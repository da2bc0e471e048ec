#include "fracdisp/observables.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "fracdisp/errors.hpp"
#include "fracdisp/fit.hpp"
#include "fracdisp/heat_kernel.hpp"
#include "fracdisp/profiles.hpp"

namespace fracdisp {

namespace {

// Trapezoid of the piecewise-linear interpolant of (t, v) over [a, b].
double trapezoid(const std::vector<MassSample>& s, double a, double b) {
    if (!(b >= a)) throw std::invalid_argument("integration bounds out of order");
    if (s.empty() || s.front().t > a + 1e-12 * std::max(1.0, a) ||
        s.back().t < b - 1e-12 * std::max(1.0, b)) {
        std::ostringstream msg;
        msg << "series does not cover [" << a << ", " << b << "]";
        throw std::invalid_argument(msg.str());
    }
    auto value_at = [&](double t) {
        auto it = std::lower_bound(s.begin(), s.end(), t, [](const MassSample& x, double v) { return x.t < v; });
        if (it == s.end()) return s.back().value;
        if (it->t == t || it == s.begin()) return it->value;
        const auto prev = std::prev(it);
        const double w = (t - prev->t) / (it->t - prev->t);
        return (1.0 - w) * prev->value + w * it->value;
    };
    double total = 0.0;
    double t_prev = a;
    double v_prev = value_at(a);
    for (const auto& x : s) {
        if (x.t <= a) continue;
        if (x.t >= b) break;
        total += 0.5 * (x.t - t_prev) * (x.value + v_prev);
        t_prev = x.t;
        v_prev = x.value;
    }
    total += 0.5 * (b - t_prev) * (value_at(b) + v_prev);
    return total;
}

}  // namespace

FirstMoments compute_M_m(const RealField& u0, double tail_threshold) {
    const double tail = tail_mass_fraction(u0);
    if (tail > tail_threshold) {
        std::ostringstream msg;
        msg << "tail mass fraction " << tail << " exceeds " << tail_threshold << "; first moment unreliable";
        throw TailMassError(msg.str(), tail);
    }
    const Grid1D& g = u0.grid();
    double M = 0.0, m = 0.0;
    for (std::size_t j = 0; j < u0.size(); ++j) {
        M += u0[j];
        m += g.x(j) * u0[j];
    }
    return {M * g.dx(), m * g.dx()};
}

RealField rho_field(const RealField& u, double M) {
    if (!(u.time() > 0.0)) throw std::invalid_argument("rho requires t > 0");
    const RealField g = heat_kernel_field(u.grid(), u.time(), 0);
    std::vector<double> out(u.size());
    for (std::size_t j = 0; j < out.size(); ++j) {
        const double mg = M * g[j];
        out[j] = u[j] * u[j] * u[j] - mg * mg * mg;
    }
    return RealField(u.grid(), std::move(out), u.time());
}

std::vector<MassSample> cube_series(const Trajectory& trajectory) {
    std::vector<MassSample> s;
    if (!trajectory.nonlinear_series.empty()) {
        s.reserve(trajectory.nonlinear_series.size());
        for (const auto& c : trajectory.nonlinear_series) s.push_back({c.t, c.value});
    } else {
        for (std::size_t i = 0; i < trajectory.snapshots.size(); ++i) {
            const RealField& u = trajectory.snapshots[i];
            double sum = 0.0;
            for (double v : u.values()) sum += v * v * v;
            s.push_back({trajectory.snapshot_times[i], sum * u.grid().dx()});
        }
    }
    return s;
}

std::vector<MassSample> rho_integral_series(const Trajectory& trajectory, double M) {
    const double c = cube_mass_factor() * M * M * M;
    std::vector<MassSample> out;
    for (const auto& x : cube_series(trajectory)) {
        if (x.t >= 1.0) out.push_back({x.t, x.value - c / x.t});
    }
    return out;
}

Moments compute_mathcal_M(const Trajectory& trajectory, double M, double T_max) {
    if (!(T_max > 1.0)) throw std::invalid_argument("T_max must exceed 1");
    const std::vector<MassSample> cubes = cube_series(trajectory);
    Moments out;
    out.M = M;
    out.T_max = T_max;
    out.mathcal_M0 = trapezoid(cubes, 0.0, 1.0);

    // a(tau) with the closed-form int (MG)^3 = c M^3 / tau.
    const double c = cube_mass_factor() * M * M * M;
    std::vector<MassSample> a;
    for (const auto& x : cubes) {
        if (x.t >= 1.0 - 1e-12) a.push_back({x.t, x.value - c / std::max(x.t, 1.0)});
    }
    if (a.empty() || a.front().t > 1.0 + 1e-12) {
        throw std::invalid_argument("cube series must contain t = 1");
    }
    a.front().t = std::max(a.front().t, 1.0);
    out.mathcal_M1 = trapezoid(a, 1.0, T_max);
    out.mathcal_M = out.mathcal_M0 + out.mathcal_M1;

    std::vector<double> lx, ly;
    bool all_zero = true;
    for (const auto& x : a) {
        if (x.t < 0.1 * T_max || x.t > T_max) continue;
        if (x.value != 0.0) all_zero = false;
        if (std::abs(x.value) > 0.0) {
            lx.push_back(std::log(x.t));
            ly.push_back(std::log(std::abs(x.value)));
        }
    }
    if (all_zero) {
        out.tail_estimate = 0.0;
        return out;
    }
    if (lx.size() < 5) {
        out.tail_available = false;
        out.tail_estimate = std::numeric_limits<double>::infinity();
        return out;
    }
    const LineFit f = least_squares(lx, ly);
    out.tail_exponent = -f.slope;
    out.tail_amplitude = std::exp(f.intercept);
    if (!(out.tail_exponent > 1.0)) {
        out.tail_available = false;
        out.tail_estimate = std::numeric_limits<double>::infinity();
        return out;
    }
    out.tail_estimate = out.tail_amplitude * std::pow(T_max, 1.0 - out.tail_exponent) / (out.tail_exponent - 1.0);
    return out;
}

std::vector<double> partial_mass_integrals(const Trajectory& trajectory, double M, const std::vector<double>& T) {
    const std::vector<MassSample> a = rho_integral_series(trajectory, M);
    std::vector<double> out;
    out.reserve(T.size());
    for (double t : T) out.push_back(trapezoid(a, 1.0, t));
    return out;
}

}  // namespace fracdisp
