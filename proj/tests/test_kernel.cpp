#include <gtest/gtest.h>

#include <lifespan/kernel_verify.hpp>

using namespace lifespan;

TEST(Kernel, PredictedSlopes) {
    EXPECT_DOUBLE_EQ(predicted_kernel_slope({0.0, 0.0, 1.0, kInf, 1}), -0.5);
    EXPECT_DOUBLE_EQ(predicted_kernel_slope({0.25, 0.5, kInf, kInf, 1}), -0.125);
    EXPECT_DOUBLE_EQ(predicted_kernel_slope({0.5, 0.5, 2.0, 2.0, 1}), 0.0);
}

TEST(Kernel, HypothesesAreChecked) {
    try {
        check_kernel_hypotheses({0.75, 0.5, kInf, kInf, 1});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::HypothesisViolated);
        EXPECT_NE(std::string(e.what()).find("gamma <= mu"), std::string::npos);
    }
    EXPECT_THROW(check_kernel_hypotheses({0.0, 0.0, 1.0, 1.0, 4}), Error);
    EXPECT_NO_THROW(check_kernel_hypotheses({0.0, 0.75, kInf, 2.0, 1}));
}

TEST(Kernel, ClassicalSmoothingSlope) {
    const auto r = kernel_slope_experiment({0.0, 0.0, 1.0, kInf, 1}, kernel_window(1e-6));
    EXPECT_NEAR(r.fitted, -0.5, 1e-9);
    EXPECT_LT(r.max_ratio_deviation, 1e-9);
}

TEST(Kernel, WeightedSmoothingSlope) {
    const auto r = kernel_slope_experiment({0.25, 0.5, kInf, kInf, 1}, kernel_window(1e-6));
    EXPECT_NEAR(r.fitted, -0.125, 0.05 * 0.125);
    EXPECT_LT(r.max_ratio_deviation, 0.1);
}

TEST(Kernel, TranslationShowsNecessityOfWeightOrder) {
    const auto taus = geometric_grid(1.0, 256.0, 17);
    const auto grow = translation_necessity_experiment({0.5, 0.0, 2.0, 2.0, 1}, taus);
    EXPECT_FALSE(grow.bounded);
    EXPECT_GE(grow.growth, 10.0);
    EXPECT_NEAR(grow.fitted_slope, 0.5, 0.05);
    EXPECT_TRUE(grow.pass);
    const auto flat = translation_necessity_experiment({0.0, 0.5, 2.0, 2.0, 1}, taus);
    EXPECT_TRUE(flat.bounded);
    EXPECT_GT(flat.ratio.front(), 0.0);
    EXPECT_THROW(translation_necessity_experiment({0.5, 0.0, kInf, 2.0, 1}, taus), Error);
}
