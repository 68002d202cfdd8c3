#include <gtest/gtest.h>

#include <lifespan/scaling.hpp>

using namespace lifespan;

namespace {
const AngularPart one = AngularPart::one();
}

TEST(Scaling, RelationIsExact) {
    const auto r = scaling_relation(1.0, 0.5);
    EXPECT_DOUBLE_EQ(r.sigma, 2.0);
    EXPECT_DOUBLE_EQ(r.exponent * (r.sigma - r.gamma), 2.0);
    EXPECT_NEAR(r.lambda_of_mu(r.mu_of_lambda(7.0)), 7.0, 1e-12);
    EXPECT_DOUBLE_EQ(scaling_relation(2.0, 0.75, 1.0).exponent, 8.0 / 3.0);
    EXPECT_THROW(scaling_relation(1.0, 2.0), Error);
}

TEST(Scaling, ExponentFit) {
    std::vector<std::pair<double, double>> pts;
    for (double l : geometric_grid(1.0, 100.0, 5)) pts.emplace_back(l, 3.0 * std::pow(l, -4.0 / 3.0));
    const auto f = exponent_fit(pts);
    EXPECT_NEAR(f.slope, -4.0 / 3.0, 1e-12);
    EXPECT_NEAR(std::exp(f.intercept), 3.0, 1e-12);
    EXPECT_NEAR(f.half_width, 0.0, 1e-10);
    EXPECT_EQ(exponent_fit({{1.0, 1.0}, {2.0, 0.25}}).slope, -2.0);
    EXPECT_THROW(exponent_fit({{1.0, 1.0}}), Error);
    EXPECT_THROW(exponent_fit({{1.0, 1.0}, {1.0, 2.0}}), Error);
}

TEST(Scaling, HomogeneousIdentityWithExactSolver) {
    const Profile psi{SingularPower{0.5, one, 1.0}, 1.0};
    const auto r = homogeneous_identity_check(psi, {1.0, 2.0, 8.0}, 1.0,
                                              [](const Profile& p) { return 0.525 * std::pow(p.lambda, -4.0 / 3.0); });
    EXPECT_LT(r.spread, 1e-12);
    EXPECT_THROW(homogeneous_identity_check(Profile{Constant{}, 1.0}, {1.0}, 1.0, [](const Profile&) { return 1.0; }), Error);
}

TEST(Scaling, MonotoneFamilies) {
    std::vector<Point> pts;
    for (double r : {0.01, 0.3, 0.99, 1.01, 5.0}) pts.push_back({r, 0, 0});
    const std::vector<double> mus{0.25, 0.5, 1.0, 2.0, 4.0};
    EXPECT_TRUE(monotonicity_check(Profile{TruncatedSingular{0.5, one, 1.0, 1.0}, 1.0}, 0.5, mus, pts, 1).pass);
    EXPECT_TRUE(monotonicity_check(Profile{TailPower{0.5, one, 1.0, 1.0}, 1.0}, 0.5, mus, pts, 1).pass);
    const Profile two{TwoPower{0.25, 0.75, one, 1.0, 1.0, 1.0}, 1.0};
    EXPECT_EQ(monotonicity_check(two, 0.25, mus, pts, 1).trend, Trend::nonincreasing);
    EXPECT_TRUE(monotonicity_check(two, 0.25, mus, pts, 1).pass);
    EXPECT_TRUE(monotonicity_check(two, 0.75, mus, pts, 1).pass);
    EXPECT_THROW(expected_trend(two, 0.5), Error);
}

TEST(Scaling, LimitStructureBranches) {
    const Profile trunc{TruncatedSingular{0.5, one, 1.0, 1.0}, 1.0};
    auto model = [](const Profile& p) {  // T of truncated data: lambda^{-2} for small, lambda^{-4/3} for large lambda
        const double l = p.lambda;
        return 0.525 * std::pow(l, -4.0 / 3.0) + 0.5 * std::pow(l, -2.0) * (l < 1.0 ? 1.0 : 0.0);
    };
    const auto down = limit_structure_check(trunc, 0.5, LambdaDirection::to_zero, 1.0, {1.0, 0.1, 0.01, 0.001}, model, 0, 0);
    EXPECT_TRUE(down.divergent_branch);
    EXPECT_TRUE(down.pass);
    const auto up = limit_structure_check(trunc, 0.5, LambdaDirection::to_infinity, 1.0, {1.0, 10.0, 100.0}, model, 0.525, 0.525);
    EXPECT_FALSE(up.divergent_branch);
    EXPECT_TRUE(up.pass);
}
