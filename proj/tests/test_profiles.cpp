#include <gtest/gtest.h>

#include <lifespan/profiles.hpp>

using namespace lifespan;

namespace {
const AngularPart one = AngularPart::one();
}

TEST(Profile, EvaluatesShippedFamilies) {
    EXPECT_DOUBLE_EQ(evaluate(Profile{Constant{2.0}, 3.0}, {0.4, 0, 0}, 1), 6.0);
    EXPECT_DOUBLE_EQ(evaluate(Profile{SingularPower{0.5, one, 1.0}, 1.0}, {4.0, 0, 0}, 1), 0.5);
    EXPECT_DOUBLE_EQ(evaluate(Profile{TruncatedSingular{0.5, one, 1.0, 1.0}, 1.0}, {4.0, 0, 0}, 1), 0.0);
    EXPECT_DOUBLE_EQ(evaluate(Profile{TailPower{0.5, one, 1.0, 1.0}, 1.0}, {0.25, 0, 0}, 1), 0.0);
    EXPECT_DOUBLE_EQ(evaluate(Profile{TwoPower{0.25, 0.75, one, 1.0, 1.0, 1.0}, 1.0}, {16.0, 0, 0}, 1), 0.125);
    EXPECT_NEAR(evaluate(Profile{DiracApprox{1.0, 1.0}, 1.0}, {0, 0, 0}, 1), 1.0 / std::sqrt(4.0 * std::numbers::pi), 1e-15);
}

TEST(Profile, SingularAtOriginThrows) {
    try {
        evaluate(Profile{SingularPower{}, 1.0}, {0, 0, 0}, 2);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::EvaluationAtSingularity);
    }
}

TEST(Profile, SectorDatumIsOddInFirstCoordinate) {
    const Profile p{SectorPsi0{1, 0.5, one, kInf, 1.0}, 1.0};
    const double a = evaluate(p, {0.3, 0.2, 0}, 2);
    const double b = evaluate(p, {-0.3, 0.2, 0}, 2);
    EXPECT_GT(a, 0.0);
    EXPECT_DOUBLE_EQ(a, -b);
    EXPECT_EQ(antisymmetry_of(p), 1);
    EXPECT_FALSE(is_nonnegative(p));
    EXPECT_DOUBLE_EQ(c_m_gamma(1, 0.5), 0.5);
    EXPECT_DOUBLE_EQ(c_m_gamma(2, 0.5), 0.5 * 2.5);
}

TEST(Profile, DilationMatchesPointwiseDefinition) {
    const std::vector<Profile> ps{Profile{BoundedBump{1.0, 1.0}, 1.0}, Profile{TruncatedSingular{0.5, one, 1.0, 1.0}, 2.0},
                                  Profile{TailPower{0.5, one, 1.0, 1.0}, 1.0},
                                  Profile{TwoPower{0.25, 0.75, one, 1.0, 1.0, 1.0}, 1.0},
                                  Profile{DiracApprox{1.0, 0.5}, 1.0}};
    for (const auto& p : ps)
        for (double mu : {0.5, 3.0})
            for (double x : {0.3, 0.9, 2.5}) {
                const double direct = std::pow(mu, 0.5) * evaluate(p, {mu * x, 0, 0}, 1);
                EXPECT_NEAR(evaluate(dilate(p, mu, 0.5), {x, 0, 0}, 1), direct, 1e-12 * (1.0 + std::abs(direct)))
                    << profile_kind(p);
            }
}

TEST(Profile, AnalyticNorms) {
    EXPECT_NEAR(*analytic_norm(Profile{BoundedBump{1.0, 1.0}, 1.0}, NormSpec{1.0, 0.0}, 1), std::sqrt(std::numbers::pi), 1e-12);
    EXPECT_DOUBLE_EQ(*analytic_norm(Profile{BoundedBump{2.0, 1.0}, 1.0}, NormSpec{kInf, 0.0}, 1), 2.0);
    EXPECT_NEAR(*analytic_norm(Profile{SingularPower{0.5, one, 1.0}, 1.0}, NormSpec{kInf, 0.5}, 1), 1.0, 1e-12);
    EXPECT_NEAR(*analytic_norm(Profile{DiracApprox{1.0, 0.01}, 1.0}, NormSpec{1.0, 0.0}, 1), 1.0, 1e-9);
}

TEST(Profile, SamplingPreservesAntisymmetry) {
    const Grid g = make_grid(1, 2.0, 32);
    const Field f = sample_profile(Profile{SectorPsi0{1, 0.5, one, 1.0, 1.0}, 1.0}, g);
    EXPECT_EQ(f.antisymmetry_axes, 1);
    for (int i = 0; i < g.n; ++i) EXPECT_DOUBLE_EQ(f.values[i], -f.values[g.n - 1 - i]);
}

TEST(Profile, SamplingConservesBumpMass) {
    const Grid g = make_grid(1, 10.0, 64);
    const Field f = sample_profile(Profile{BoundedBump{1.0, 1.0}, 1.0}, g);
    EXPECT_NEAR(norm(f, NormSpec{1.0, 0.0}), std::sqrt(std::numbers::pi), 1e-10);
}
