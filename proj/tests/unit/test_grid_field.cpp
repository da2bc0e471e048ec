#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "fracdisp/field.hpp"
#include "fracdisp/grid.hpp"

using namespace fracdisp;

TEST(Grid, SmallestGrid) {
    const Grid1D g = make_grid(1.0, 4);
    EXPECT_DOUBLE_EQ(g.dx(), 0.5);
    EXPECT_EQ(g.points(), (std::vector<double>{-1.0, -0.5, 0.0, 0.5}));
    const double pi = std::numbers::pi;
    EXPECT_EQ(g.wavenumbers(), (std::vector<double>{0.0, pi, -2.0 * pi, -pi}));
    EXPECT_EQ(g.nyquist_index(), 2u);
    EXPECT_DOUBLE_EQ(g.max_wavenumber(), 2.0 * pi);
}

TEST(Grid, RejectsBadShapes) {
    EXPECT_THROW(make_grid(1.0, 7), std::invalid_argument);
    EXPECT_THROW(make_grid(1.0, 2), std::invalid_argument);
    EXPECT_THROW(make_grid(0.0, 16), std::invalid_argument);
    EXPECT_THROW(make_grid(-3.0, 16), std::invalid_argument);
    EXPECT_THROW(make_grid(INFINITY, 16), std::invalid_argument);
}

TEST(Grid, ModesInFftOrder) {
    const Grid1D g(10.0, 8);
    const long expect[] = {0, 1, 2, 3, -4, -3, -2, -1};
    for (std::size_t i = 0; i < 8; ++i) EXPECT_EQ(g.mode(i), expect[i]);
    EXPECT_DOUBLE_EQ(g.wavenumber(5), -3.0 * std::numbers::pi / 10.0);
}

TEST(Field, SampleAndArithmetic) {
    const Grid1D g(2.0, 8);
    RealField a = RealField::sample(g, [](double x) { return x; }, 0.5);
    RealField b = RealField::sample(g, [](double x) { return 2.0 * x; });
    EXPECT_EQ(a.time(), 0.5);
    RealField c = b - a;
    for (std::size_t j = 0; j < g.size(); ++j) EXPECT_DOUBLE_EQ(c[j], g.x(j));
    c.axpy(2.0, a);
    c *= 0.5;
    for (std::size_t j = 0; j < g.size(); ++j) EXPECT_DOUBLE_EQ(c[j], 1.5 * g.x(j));
    EXPECT_EQ(a.with_time(3.0).time(), 3.0);
}

TEST(Field, Validation) {
    const Grid1D g(2.0, 8);
    EXPECT_THROW(RealField(g, std::vector<double>(6)), std::invalid_argument);
    EXPECT_THROW(RealField(g, std::vector<double>(8, NAN)), std::invalid_argument);
    EXPECT_THROW(RealField(g, std::vector<double>(8), -1.0), std::invalid_argument);
    RealField a = RealField::zeros(g);
    EXPECT_THROW(a += RealField::zeros(Grid1D(3.0, 8)), std::invalid_argument);
    EXPECT_THROW(SpectralCoeffs(g, std::vector<std::complex<double>>(4)), std::invalid_argument);
}
