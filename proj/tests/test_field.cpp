#include <gtest/gtest.h>

#include <lifespan/field.hpp>
#include <lifespan/profiles.hpp>

using namespace lifespan;

TEST(Grid, RejectsOddAndUnsupported) {
    EXPECT_THROW(make_grid(1, 1.0, 17), Error);
    EXPECT_THROW(make_grid(4, 1.0, 16), Error);
    EXPECT_THROW(make_grid(1, 1.0, 14), Error);
    EXPECT_THROW(make_grid(1, -1.0, 16), Error);
    try {
        make_grid(1, 1.0, 33);
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::OddPointCount);
    }
}

TEST(Grid, CellCentredCoordinatesAvoidOrigin) {
    const Grid g = make_grid(1, 1.0, 16);
    EXPECT_DOUBLE_EQ(g.h, 0.125);
    EXPECT_DOUBLE_EQ(g.coord(0), -0.9375);
    EXPECT_DOUBLE_EQ(g.coord(8), 0.0625);
    for (int i = 0; i < g.n; ++i) EXPECT_NE(g.coord(i), 0.0);
    EXPECT_EQ(make_grid(3, 1.0, 16).size(), 4096u);
}

TEST(Field, NormsOfConstant) {
    const Grid g = make_grid(2, 1.0, 16);
    const Field f(g, 3.0);
    EXPECT_DOUBLE_EQ(norm(f, NormSpec{kInf, 0.0}), 3.0);
    EXPECT_NEAR(norm(f, NormSpec{1.0, 0.0}), 12.0, 1e-12);
    EXPECT_NEAR(norm(f, NormSpec{2.0, 0.0}), 6.0, 1e-12);
}

TEST(Quadrature, OriginCellOfSingularPower) {
    // mean of |x|^{-3/4} over [0, h] is 4 h^{-3/4}
    const Grid g = make_grid(1, 1.0, 16);
    EXPECT_NEAR(cell_mean_of_power(g, 8, -0.75), 4.0 * std::pow(0.125, -0.75), 5e-4 * 19.03);
    EXPECT_NEAR(cell_mean_of_power(g, 7, -0.75), cell_mean_of_power(g, 8, -0.75), 1e-12);
}

TEST(Quadrature, OriginCellIndependentOfBoxSize) {
    const double h = 0.001395035842;
    const Grid small = make_grid(1, 400 * h, 800);
    const Grid large = make_grid(1, 1600 * h, 3200);
    EXPECT_DOUBLE_EQ(cell_mean_of_power(small, 400, -0.75), cell_mean_of_power(large, 1600, -0.75));
}

TEST(Quadrature, PowerWeightsAreCellMeansNearOrigin) {
    const Grid g = make_grid(2, 1.0, 16);
    const auto w = power_weights(g, 1.0);
    EXPECT_EQ(w.size(), g.size());
    for (double v : w) EXPECT_GT(v, 0.0);
}
