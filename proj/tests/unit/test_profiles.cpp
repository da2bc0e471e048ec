#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "fracdisp/diagnostics.hpp"
#include "fracdisp/heat_kernel.hpp"
#include "fracdisp/profiles.hpp"
#include "fracdisp/spectral.hpp"
#include "oracles.hpp"

using namespace fracdisp;

namespace {

// Nested 2-D quadrature values of Psi_* (oracle::psi_star_nested, resolution 3).
constexpr double kPsiHalf = -0.0053870714292830139;
constexpr double kPsiOne = -0.0066845844032234845;
constexpr double kPsiTwo = -0.00076620282169201023;
constexpr double kPsiThreeHalf = 0.0012079893176958584;

// oracle::limit_combination_l2
constexpr double kCombinationL2 = 0.066624480193694227;  // a = 0.25, b = 1.5
constexpr double kPsiL2 = 0.0098650153064292895;         // a = 0, b = 1

}  // namespace

TEST(Profiles, GaussianDifferenceIdentity) {
    double worst = 0.0;
    for (int i = 0; i <= 200; ++i) {
        const double y = -10.0 + 0.1 * i;
        for (int k = 1; k <= 50; ++k) {
            const double s = k / 50.0;
            const double lhs = f_scaled(y, s);
            const double rhs = cube_mass_factor() / s * (heat_kernel(y, s / 3.0) - heat_kernel(y, s));
            worst = std::max(worst, std::abs(lhs - rhs));
        }
    }
    EXPECT_LE(worst, 1e-12);
}

TEST(Profiles, CubeIdentity) {
    double worst = 0.0;
    for (int i = 0; i <= 200; ++i) {
        const double y = -10.0 + 0.1 * i;
        for (int k = 1; k <= 50; ++k) {
            const double tau = k / 50.0;
            const double g = heat_kernel(y, tau);
            worst = std::max(worst, std::abs(g * g * g - cube_mass_factor() / tau * heat_kernel(y, tau / 3.0)));
        }
    }
    EXPECT_LE(worst, 1e-12);
}

TEST(Profiles, FstarHasZeroMean) {
    const auto r = integrate([](double y) { return fstar(y); }, -30.0, 30.0, {});
    EXPECT_LE(std::abs(r.value), 1e-12);
    EXPECT_DOUBLE_EQ(fstar(0.7), oracle::fstar(0.7));
}

TEST(Profiles, FScaledRejectsNonpositiveS) { EXPECT_THROW(f_scaled(1.0, 0.0), std::invalid_argument); }

TEST(Profiles, PsiStarMatchesNestedQuadrature) {
    EXPECT_NEAR(psi_star(0.5), kPsiHalf, 1e-7);
    EXPECT_NEAR(psi_star(1.0), kPsiOne, 1e-7);
    EXPECT_NEAR(psi_star(2.0), kPsiTwo, 1e-7);
    EXPECT_NEAR(psi_star(3.5), kPsiThreeHalf, 1e-7);
}

TEST(Profiles, PsiStarLiveOracleAgreement) {
    EXPECT_NEAR(psi_star(1.3), oracle::psi_star_nested(1.3, 2), 1e-7);
}

TEST(Profiles, PsiStarIsOddWithZeroIntegral) {
    EXPECT_EQ(psi_star(0.0), 0.0);
    for (double x : {0.3, 1.7, 4.0}) EXPECT_NEAR(psi_star(-x), -psi_star(x), 1e-15);
    const auto r = integrate([](double x) { return psi_star(x); }, -40.0, 40.0, {32, 8, 1e-10});
    EXPECT_LE(std::abs(r.value), 1e-9);
}

TEST(Profiles, PsiFieldIsSelfSimilarWithZeroMean) {
    const Grid1D grid(200.0, 2048);
    ProfileRequest req;
    req.grid = grid;
    req.time = 9.0;
    const RealField psi = psi_field(req);
    EXPECT_LE(std::abs(integral(psi)), 1e-12);
    const double x = grid.x(1100);
    EXPECT_NEAR(psi[1100], psi_star(x / 3.0) / 9.0, 1e-13);
}

TEST(Profiles, PsiPartialLimits) {
    EXPECT_EQ(psi_star_partial(1.0, 1.0), 0.0);
    EXPECT_DOUBLE_EQ(psi_star_partial(1.0, 0.0), psi_star(1.0));
    EXPECT_THROW(psi_star_partial(1.0, -0.1), std::invalid_argument);
}

TEST(Profiles, VMinusVTwoWays) {
    const Grid1D grid(60.0, 2048);
    for (double t : {2.0, 4.0}) {
        const std::vector<double> v = oracle::duhamel_v_spectral(t, grid);
        ProfileRequest req;
        req.grid = grid;
        req.time = t;
        const RealField V = log_correction_field(req);
        const RealField w = v_minus_V_rescaled_field(t, grid);
        double worst = 0.0;
        for (std::size_t j = 0; j < grid.size(); ++j) worst = std::max(worst, std::abs(v[j] - V[j] - w[j]));
        EXPECT_LE(worst, 1e-7) << "t = " << t;
    }
}

TEST(Profiles, DuhamelVFieldMatchesSpectralOracle) {
    const Grid1D grid(60.0, 2048);
    const std::vector<double> v = oracle::duhamel_v_spectral(3.0, grid);
    const RealField w = duhamel_v_field(3.0, grid);
    double worst = 0.0;
    for (std::size_t j = 0; j < grid.size(); ++j) worst = std::max(worst, std::abs(v[j] - w[j]));
    EXPECT_LE(worst, 1e-9);
    EXPECT_EQ(lp_norm(duhamel_v_field(1.0, grid), INFINITY), 0.0);
}

TEST(Profiles, ExpansionMeanEqualsMass) {
    const Grid1D grid(100.0, 1024);
    for (double alpha : {2.5, 1.5, 1.4}) {
        ProfileRequest req;
        req.params = ModelParams::make(alpha, 3.0);
        req.grid = grid;
        req.mass = 0.37;
        req.first_moment = 0.2;
        req.time = 7.0;
        EXPECT_NEAR(integral(expansion_field(req)), 0.37, 1e-14) << alpha;
    }
}

TEST(Profiles, ExpansionCaseIIsTwoTermHeatProfile) {
    const Grid1D grid(60.0, 1024);
    ProfileRequest req;
    req.params = ModelParams::make(2.5, 1.0);
    req.grid = grid;
    req.mass = 0.8;
    req.first_moment = -0.3;
    req.time = 2.0;
    const RealField e = expansion_field(req);
    double worst = 0.0;
    for (std::size_t j = 0; j < grid.size(); ++j) {
        const double x = grid.x(j);
        worst = std::max(worst, std::abs(e[j] - (0.8 * heat_kernel(x, 2.0) + 0.3 * heat_kernel(x, 2.0, 1))));
    }
    EXPECT_LE(worst, 1e-14);
}

TEST(Profiles, ResonantTermAtAlphaTwoIsThirdDerivative) {
    // (D^2 d_x) G has symbol xi^2 i xi = -(i xi)^3, so the N = 1 term is -M t d_x^3 G.
    const Grid1D grid(60.0, 1024);
    ProfileRequest req;
    req.params = ModelParams::make(AlphaInput::parse("2"), 1.0);
    req.grid = grid;
    req.mass = 1.5;
    req.time = 3.0;
    const RealField r = resonant_term_field(req);
    double worst = 0.0;
    for (std::size_t j = 0; j < grid.size(); ++j) {
        worst = std::max(worst, std::abs(r[j] + 1.5 * 3.0 * heat_kernel(grid.x(j), 3.0, 3)));
    }
    EXPECT_LE(worst, 1e-14);
}

TEST(Profiles, LimitConstantsTrivialCases) {
    ProfileRequest req;
    req.params = ModelParams::make(2.5, 3.0);
    req.grid = Grid1D(40.0, 2048);
    const LimitConstants zero = limit_constants(req, INFINITY);
    EXPECT_EQ(zero.c_star, 0.0);
    EXPECT_EQ(zero.c_dagger, 0.0);

    req.params = ModelParams::make(2.5, 0.0);
    req.mass = 1.0;
    req.first_moment = 0.4;
    req.duhamel_mass = 0.3;
    const LimitConstants lin = limit_constants(req, 2.0);
    EXPECT_EQ(lin.c_star, 0.0);
    EXPECT_NEAR(lin.c_dagger, 0.4 * lp_norm(heat_kernel_field(req.grid, 1.0, 1), 2.0), 1e-15);
}

TEST(Profiles, LimitConstantsMatchDirectQuadrature) {
    // beta script-M / 3 = 0.25 and beta M^3 / 3 = 1.5 with beta = 3.
    ProfileRequest req;
    req.params = ModelParams::make(2.5, 3.0);
    req.grid = Grid1D(40.0, 4096);
    req.mass = std::cbrt(1.5);
    req.duhamel_mass = 0.25;
    const LimitConstants c = limit_constants(req, 2.0);
    EXPECT_NEAR(c.c_star / kCombinationL2, 1.0, 1e-6);
    EXPECT_NEAR(c.c_dagger, c.c_star, 1e-15);
    EXPECT_NEAR(lp_norm(psi_star_field(req.grid), 2.0) / kPsiL2, 1.0, 1e-6);
}

TEST(Profiles, LogCoefficientAtBetaThree) {
    const double M = 0.7;
    EXPECT_DOUBLE_EQ(log_coefficient(3.0, M), M * M * M / (4.0 * std::numbers::sqrt3 * std::numbers::pi));
    EXPECT_DOUBLE_EQ(log_coefficient(3.0, 1.0), cube_mass_factor());
}

TEST(Profiles, VMinusVMinusPsiDecays) {
    // Scaled sup norm t^{3/2} ||v - V - Psi|| must not increase on this ladder.
    const Grid1D grid(400.0, 8192);
    double prev = INFINITY;
    for (double t : {4.0, 16.0, 64.0}) {
        ProfileRequest req;
        req.grid = grid;
        req.time = t;
        RealField d = v_minus_V_rescaled_field(t, grid);
        d -= psi_field(req);
        const double scaled = std::pow(t, 1.5) * lp_norm(d, INFINITY);
        EXPECT_LE(scaled, prev) << t;
        prev = scaled;
    }
}

TEST(Profiles, RequestValidation) {
    ProfileRequest req;
    req.time = 0.0;
    EXPECT_THROW(psi_field(req), std::invalid_argument);
    EXPECT_THROW(duhamel_v_field(0.5, req.grid), std::invalid_argument);
}
