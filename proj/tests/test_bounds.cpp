#include <gtest/gtest.h>

#include <lifespan/bounds.hpp>

using namespace lifespan;

namespace {
const ProblemSpec plain{1, 1.0, 0.0, 0};
const AngularPart one = AngularPart::one();

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::ConfigInvalid;
}
} // namespace

TEST(Bounds, ContractionConstant) { EXPECT_NEAR(contraction_constant(1.0, 2.0, 2.0, 1), 2.83267182, 1e-6); }

TEST(Bounds, LebesgueBound) {
    const auto b = lower_bound_lebesgue(1.0, 1.0, plain, kInf);
    EXPECT_DOUBLE_EQ(b.T, 0.0625);
    EXPECT_DOUBLE_EQ(b.exponent, 1.0);
    EXPECT_DOUBLE_EQ(lower_bound_lebesgue(2.0, 1.0, plain, kInf).T, 0.03125);
    EXPECT_DOUBLE_EQ(lebesgue_exponent(1.0, 1, 1.0), 2.0);
}

TEST(Bounds, LebesgueRejectsSubcriticalQ) {
    const ProblemSpec s{1, 3.0, 0.0, 0};
    EXPECT_EQ(kind_of([&] { lower_bound_lebesgue(1.0, 1.0, s, 1.0); }), ErrorKind::CriticalOrSubcritical);
}

TEST(Bounds, MeasureBound) {
    const auto b = lower_bound_measure(1.0, 1.0, plain);
    EXPECT_NEAR(b.T, 0.000680275356, 1e-12);
    EXPECT_DOUBLE_EQ(b.exponent, 2.0);
    EXPECT_EQ(kind_of([] { lower_bound_measure(1.0, 1.0, ProblemSpec{1, 2.0, 0.0, 0}); }), ErrorKind::SupercriticalForMeasures);
}

TEST(Bounds, WeightedAndSingular) {
    const auto w = lower_bound_weighted(1.0, 1.0, plain, kInf, 0.5);
    EXPECT_NEAR(w.T, 0.00684108083, 1e-9);
    EXPECT_NEAR(w.exponent, 4.0 / 3.0, 1e-15);
    const double Lr = scaled_sup_constant(0.5, one, 1, singular_r(plain, 0.5)).value;
    const auto s = lower_bound_singular(1.0, Lr, plain, 0.5);
    EXPECT_NEAR(s.T, 0.00957531259, 1e-8);
    EXPECT_NEAR(lower_bound_singular(2.0, Lr, plain, 0.5).T, s.T * std::pow(2.0, -4.0 / 3.0), 1e-15);
    EXPECT_EQ(kind_of([] { lower_bound_weighted(1.0, 1.0, ProblemSpec{1, 4.0, 0.0, 0}, kInf, 0.5); }),
              ErrorKind::HypothesisViolated);
}

TEST(Bounds, HardyHenonExponents) {
    const auto henon = lower_bound_hardy_henon(1.0, 1.0, ProblemSpec{1, 2.0, 1.0, 0}, kInf, 0.75);
    EXPECT_NEAR(henon.exponent, 8.0 / 3.0, 1e-12);
    EXPECT_NEAR(henon.T, 0.000137797451, 1e-11);
    const auto hardy = lower_bound_hardy_henon(1.0, 1.0, ProblemSpec{2, 1.0, -1.0, 0}, 4.0, 0.0);
    EXPECT_NEAR(hardy.exponent, 4.0, 1e-12);
    EXPECT_NEAR(hardy.T, 1.62992318e-06, 1e-13);
    const auto flat = lower_bound_hardy_henon(1.0, 1.0, ProblemSpec{1, 2.0, 1.0, 0}, kInf, 0.5);
    EXPECT_NEAR(flat.exponent, 2.0, 1e-12);
}

TEST(Bounds, SectorBound) {
    const ProblemSpec s{1, 1.0, 0.0, 1};
    EXPECT_DOUBLE_EQ(sector_exponent(1, 0.5, 1.0), 4.0);
    const auto b = lower_bound_sector(1.0, sector_sup_constant(1, 0.5, one, 1), s, 0.5);
    EXPECT_NEAR(b.T, 0.280099487, 1e-7);
    EXPECT_THROW(sector_exponent(1, 0.5, 2.0), Error);
}

TEST(Bounds, UpperBoundNecessaryCondition) {
    auto c = upper_bound_necessary(Profile{Constant{1.0}, 2.0}, plain, 10.0, std::nullopt, SemigroupRoute::analytic);
    ASSERT_TRUE(c);
    EXPECT_NEAR(c->T, 0.5, 1e-4);
    auto d = upper_bound_necessary(Profile{DiracApprox{1.0, 0.0}, 1.0}, plain, 100.0, std::nullopt, SemigroupRoute::analytic);
    ASSERT_TRUE(d);
    EXPECT_NEAR(d->T, 4.0 * std::numbers::pi, 1e-3);
    auto s = upper_bound_necessary(Profile{SingularPower{0.5, one, 1.0}, 1.0}, plain, 10.0, std::nullopt,
                                   SemigroupRoute::analytic);
    ASSERT_TRUE(s);
    EXPECT_NEAR(s->T, std::pow(1.44640918, -4.0 / 3.0), 1e-4);
    auto g = upper_bound_necessary(Profile{SingularPower{0.5, one, 1.0}, 1.0}, plain, 10.0, make_grid(1, 40.0, 8000));
    ASSERT_TRUE(g);
    EXPECT_NEAR(g->T, 0.612030029, 1e-6);
    EXPECT_FALSE(upper_bound_necessary(Profile{Constant{1.0}, 2.0}, plain, 0.4, std::nullopt, SemigroupRoute::analytic));
}

TEST(Bounds, UpperBoundRejectsNegativeData) {
    EXPECT_EQ(kind_of([] {
                  upper_bound_necessary(Profile{Constant{-1.0}, 1.0}, plain, 1.0, std::nullopt, SemigroupRoute::analytic);
              }),
              ErrorKind::NegativeData);
}

TEST(Bounds, AsymptoticConstants) {
    const auto bump = asymptotic_constants(Profile{BoundedBump{1.0, 1.0}, 1.0}, Direction::to_infinity, ProblemSpec{1, 2.0, 0, 0});
    EXPECT_DOUBLE_EQ(bump.constant, 0.5);
    EXPECT_DOUBLE_EQ(bump.exponent, 2.0);
    const auto small = asymptotic_constants(Profile{BoundedBump{1.0, 1.0}, 1.0}, Direction::to_zero, plain);
    EXPECT_NEAR(small.constant, 4.0, 1e-12);
    EXPECT_DOUBLE_EQ(small.exponent, 2.0);
    EXPECT_THROW(asymptotic_constants(Profile{Constant{1.0}, 1.0}, Direction::to_zero, plain), Error);
}

TEST(Bounds, ReportListsInapplicableBounds) {
    const auto r = bound_report(Profile{TruncatedSingular{0.5, one, 1.0, 1.0}, 1.0}, plain);
    ASSERT_TRUE(r.best_lower());
    EXPECT_EQ(r.best_lower()->name, "singular");
    bool lebesgue_inf_listed = false;
    for (const auto& x : r.inapplicable) lebesgue_inf_listed = lebesgue_inf_listed || x.name == "lebesgue_q=inf";
    EXPECT_TRUE(lebesgue_inf_listed);
    for (const auto& b : r.lower) EXPECT_GT(b.T, 0.0);
}

TEST(Bounds, FormulaScalingIsExact) {
    const Profile p{TruncatedSingular{0.5, one, 1.0, 1.0}, 1.0};
    for (const auto& b : bound_report(p, plain).lower)
        for (double l : {0.1, 3.0, 100.0}) {
            const auto r = bound_report(p.scaled(l), plain);
            for (const auto& c : r.lower)
                if (c.name == b.name) EXPECT_NEAR(std::pow(l, c.exponent) * c.T / b.T, 1.0, 1e-12) << b.name;
        }
}
