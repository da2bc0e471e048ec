#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "fracdisp/errors.hpp"
#include "fracdisp/heat_kernel.hpp"
#include "fracdisp/observables.hpp"
#include "fracdisp/profiles.hpp"

using namespace fracdisp;

namespace {

Trajectory run(const RealField& u0, double alpha, double beta, double t_end) {
    SolverConfig c;
    c.params = ModelParams::make(alpha, beta);
    c.grid = u0.grid();
    c.dt = default_time_step(c.grid);
    c.t_end = t_end;
    c.snapshot_times = {1.0, t_end};
    return evolve(u0, c);
}

}  // namespace

TEST(Moments, GaussianUnitMass) {
    const Grid1D grid(40.0, 1024);
    const FirstMoments mm = compute_M_m(heat_kernel_field(grid, 1.0).with_time(0.0));
    EXPECT_NEAR(mm.M, 1.0, 1e-10);
    EXPECT_NEAR(mm.m, 0.0, 1e-10);
}

TEST(Moments, OddGaussianFirstMoment) {
    const Grid1D grid(40.0, 1024);
    const RealField u = RealField::sample(grid, [](double x) { return x * std::exp(-x * x); });
    const FirstMoments mm = compute_M_m(u);
    EXPECT_NEAR(mm.M, 0.0, 1e-8);
    EXPECT_NEAR(mm.m, std::sqrt(std::numbers::pi) / 2.0, 1e-8);
}

TEST(Moments, TranslationShiftsFirstMoment) {
    const Grid1D grid(40.0, 1024);
    const double a = 1.0;
    const RealField u = RealField::sample(grid, [a](double x) { return 0.4 * heat_kernel(x - a, 1.0); });
    const RealField v = RealField::sample(grid, [](double x) { return 0.4 * heat_kernel(x, 1.0); });
    const FirstMoments mu = compute_M_m(u), mv = compute_M_m(v);
    EXPECT_NEAR(mu.M, 0.4, 1e-10);
    EXPECT_NEAR(mu.m, mv.m + a * mv.M, 1e-8);
}

TEST(Moments, TailMassRejected) {
    const Grid1D grid(10.0, 256);
    const RealField flat(grid, std::vector<double>(256, 1.0));
    try {
        compute_M_m(flat);
        FAIL() << "expected TailMassError";
    } catch (const TailMassError& e) {
        EXPECT_GT(e.tail_fraction(), 0.4);
    }
}

TEST(Rho, VanishesOnTheHeatProfile) {
    const Grid1D grid(40.0, 512);
    RealField u = heat_kernel_field(grid, 3.0);
    u *= 0.6;
    for (double v : rho_field(u, 0.6).values()) EXPECT_EQ(v, 0.0);
    const RealField r = rho_field(u, 0.0);
    for (std::size_t j = 0; j < u.size(); ++j) EXPECT_EQ(r[j], u[j] * u[j] * u[j]);
    EXPECT_THROW(rho_field(u.with_time(0.0), 1.0), std::invalid_argument);
}

TEST(MathcalM, ZeroTrajectory) {
    const Grid1D grid(40.0, 256);
    const Trajectory tr = run(RealField::zeros(grid), 2.0, 3.0, 20.0);
    const Moments m = compute_mathcal_M(tr, 0.0, 20.0);
    EXPECT_EQ(m.mathcal_M, 0.0);
    EXPECT_EQ(m.tail_estimate, 0.0);
    EXPECT_TRUE(m.tail_available);
}

TEST(MathcalM, AdditiveAndReproducibleAcrossResolutions) {
    auto compute = [](std::size_t n) {
        const Grid1D grid(150.0, n);
        const RealField u0 = RealField::sample(grid, [](double x) { return 0.1 * x * std::exp(-x * x); });
        return compute_mathcal_M(run(u0, 1.5, 0.0, 50.0), 0.0, 50.0);
    };
    const Moments a = compute(1024), b = compute(2048);
    EXPECT_EQ(a.mathcal_M, a.mathcal_M0 + a.mathcal_M1);
    EXPECT_NE(a.mathcal_M, 0.0);
    EXPECT_LE(std::abs(a.mathcal_M - b.mathcal_M), 1e-4 * std::abs(b.mathcal_M));
}

TEST(MathcalM, TailBoundsTruncationChange) {
    const Grid1D grid(300.0, 2048);
    const RealField u0 = RealField::sample(grid, [](double x) { return 0.3 * heat_kernel(x, 1.0); });
    const Trajectory tr = run(u0, 2.5, 3.0, 200.0);
    const double M = compute_M_m(u0).M;
    const Moments short_run = compute_mathcal_M(tr, M, 100.0);
    const Moments long_run = compute_mathcal_M(tr, M, 200.0);
    ASSERT_TRUE(short_run.tail_available);
    EXPECT_GT(short_run.tail_exponent, 1.0);
    EXPECT_LT(std::abs(long_run.mathcal_M - short_run.mathcal_M), short_run.tail_estimate);

    const std::vector<double> partial = partial_mass_integrals(tr, M, {10.0, 20.0, 40.0, 80.0, 160.0});
    for (std::size_t i = 2; i < partial.size(); ++i) {
        EXPECT_LT(std::abs(partial[i] - partial[i - 1]), std::abs(partial[i - 1] - partial[i - 2]));
    }
}

TEST(MathcalM, RequiresCoverage) {
    const Grid1D grid(40.0, 256);
    const RealField u0 = RealField::sample(grid, [](double x) { return 0.1 * std::exp(-x * x); });
    const Trajectory tr = run(u0, 2.0, 3.0, 5.0);
    EXPECT_THROW(compute_mathcal_M(tr, 0.1, 10.0), std::invalid_argument);
    EXPECT_THROW(compute_mathcal_M(tr, 0.1, 0.5), std::invalid_argument);
}
