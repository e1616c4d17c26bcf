#include <gtest/gtest.h>

#include <cmath>

#include "ineq/errors.hpp"
#include "ineq/function_spec.hpp"
#include "ineq/random.hpp"
#include "ineq/young.hpp"
#include "oracles.hpp"

namespace ineq {
namespace {

TEST(YoungPair, LargeArgumentsFavorStandard) {
  const YoungComparison c = young_pair(5, 130, 4);
  EXPECT_NEAR(c.rhs_standard, oracle::kYoungEx1Standard, 1e-9);
  EXPECT_NEAR(c.rhs_swapped, oracle::kYoungEx1Swapped, 1e-6);
  EXPECT_EQ(c.winner, YoungWinner::Standard);
  EXPECT_EQ(c.case_id, YoungCase::BothAboveOne);
  EXPECT_DOUBLE_EQ(c.product, 650.0);
  EXPECT_FALSE(c.y_critical.has_value());
}

TEST(YoungPair, SmallArgumentsFavorSwapped) {
  const YoungComparison c = young_pair(0.2, 0.5, 4);
  EXPECT_NEAR(c.rhs_standard, 0.29803, 1e-5);
  EXPECT_NEAR(c.rhs_swapped, 0.10334, 1e-5);
  EXPECT_EQ(c.winner, YoungWinner::Swapped);
  EXPECT_EQ(c.case_id, YoungCase::BothBelowOne);
}

TEST(YoungPair, UnitArgumentsTie) {
  for (double p : {1.5, 2.0, 4.0, 11.0}) {
    const YoungComparison c = young_pair(1, 1, p);
    EXPECT_NEAR(c.rhs_standard, 1.0, 1e-15);
    EXPECT_NEAR(c.rhs_swapped, 1.0, 1e-15);
    EXPECT_EQ(c.winner, YoungWinner::Tie);
  }
}

TEST(YoungPair, StraddleValuesAroundCriticalPoint) {
  const YoungComparison lo = young_pair(0.5, 1.3, 4);
  EXPECT_NEAR(lo.rhs_standard, oracle::kYoungStd13, 1e-12);
  EXPECT_NEAR(lo.rhs_swapped, oracle::kYoungSwp13, 1e-12);
  EXPECT_EQ(lo.winner, YoungWinner::Swapped);
  EXPECT_EQ(lo.case_id, YoungCase::Straddle);
  ASSERT_TRUE(lo.y_critical.has_value());
  EXPECT_NEAR(*lo.y_critical, oracle::kYcrHalf4, 1e-11);

  const YoungComparison hi = young_pair(0.5, 1.4, 4);
  EXPECT_NEAR(hi.rhs_standard, oracle::kYoungStd14, 1e-12);
  EXPECT_NEAR(hi.rhs_swapped, oracle::kYoungSwp14, 1e-12);
  EXPECT_EQ(hi.winner, YoungWinner::Standard);
}

TEST(YoungPair, ReportsInCallerCoordinates) {
  const YoungComparison a = young_pair(130, 5, 4);
  EXPECT_EQ(a.x, 130.0);
  EXPECT_EQ(a.y, 5.0);
  const YoungComparison b = young_pair(5, 130, 4);
  EXPECT_DOUBLE_EQ(a.rhs_standard, b.rhs_swapped);
  EXPECT_DOUBLE_EQ(a.rhs_swapped, b.rhs_standard);
}

TEST(YoungPair, RejectsBadInput) {
  EXPECT_THROW(young_pair(1, 2, 1.0), ParameterError);
  EXPECT_THROW(young_pair(-1, 2, 3), ParameterError);
  EXPECT_THROW(young_pair(1, NAN, 3), ParameterError);
}

TEST(YoungProperty, ProductNeverExceedsEitherBound) {
  Sampler rng(31);
  for (int i = 0; i < 10000; ++i) {
    const double x = rng.log_uniform(1e-3, 1e3);
    const double y = rng.log_uniform(1e-3, 1e3);
    const double p = rng.uniform(1.05, 10.0);
    const YoungComparison c = young_pair(x, y, p);
    const double scale = std::max(c.rhs_standard, c.rhs_swapped);
    EXPECT_LE(c.product, std::min(c.rhs_standard, c.rhs_swapped) + 1e-12 * scale);
  }
}

TEST(YoungProperty, WinnerFollowsCaseRules) {
  Sampler rng(32);
  for (int i = 0; i < 10000; ++i) {
    const double p = rng.uniform(2.0, 10.0);
    const double a = rng.uniform(1.0, 50.0);
    const double b = rng.uniform(1.0, 50.0);
    const YoungComparison above = young_pair(std::min(a, b), std::max(a, b), p);
    EXPECT_NE(above.winner, YoungWinner::Swapped);

    const double c = rng.uniform01();
    const double d = rng.uniform01();
    const YoungComparison below = young_pair(std::min(c, d), std::max(c, d), p);
    EXPECT_NE(below.winner, YoungWinner::Standard);
  }
}

TEST(CriticalY, Values) {
  EXPECT_NEAR(critical_y(0.5, 4), oracle::kYcrHalf4, 1e-11);
  EXPECT_NEAR(critical_y(1.0, 3), 1.0, 1e-12);
  const double yc = critical_y(0.5, 4);
  EXPECT_EQ(young_pair(0.5, yc - 1e-3, 4).winner, YoungWinner::Swapped);
  EXPECT_EQ(young_pair(0.5, yc + 1e-3, 4).winner, YoungWinner::Standard);
  EXPECT_THROW(critical_y(1.5, 4), ParameterError);
  EXPECT_THROW(critical_y(0.5, 1.5), ParameterError);
}

TEST(CriticalY, ResidualIsSmall) {
  Sampler rng(33);
  for (int i = 0; i < 500; ++i) {
    const double x = rng.uniform(0.01, 1.0);
    const double p = rng.uniform(2.0, 10.0);
    const double q = p / (p - 1);
    const double y = critical_y(x, p);
    const double residual =
        std::pow(y, p) / p - std::pow(y, q) / q - (std::pow(x, p) / p - std::pow(x, q) / q);
    EXPECT_LE(std::abs(residual), 1e-10) << x << " " << p;
  }
}

TEST(YoungIntegralGap, ClosedForms) {
  EXPECT_NEAR(young_integral_gap(FunctionSpec::power(1), 1, 1), 0.0, 1e-10);
  EXPECT_NEAR(young_integral_gap(FunctionSpec::power(3), 1, 1), 0.0, 1e-10);
  EXPECT_NEAR(young_integral_gap(FunctionSpec::power(3), 1, 0.5), oracle::kYoungGapCube, 1e-10);
  EXPECT_THROW(young_integral_gap(FunctionSpec::exp(1), 1, 1), PreconditionError);
}

TEST(YoungIntegralGap, NonnegativeAndZeroOnTheGraph) {
  Sampler rng(34);
  const std::vector<FunctionSpec> fs = {FunctionSpec::power(2), FunctionSpec::power(0.5),
                                        FunctionSpec::poly({0, 1, 2}),
                                        FunctionSpec::poly({0, 0.5, 0, 1})};
  for (const auto& f : fs) {
    for (int i = 0; i < 20; ++i) {
      const double a = rng.uniform(0.1, 3.0);
      const double b = rng.uniform(0.1, 3.0);
      EXPECT_GE(young_integral_gap(f, a, b), -1e-10) << to_string(f);
      EXPECT_NEAR(young_integral_gap(f, a, f(a)), 0.0, 1e-8) << to_string(f);
    }
  }
}

TEST(RefinedHoelder, Values) {
  const ChainReport same = rgh_refined_chain({1, 1}, {1, 1}, 2);
  EXPECT_NEAR(same.left, 1.0, 1e-15);
  EXPECT_NEAR(same.middle, 1.0, 1e-15);
  EXPECT_TRUE(same.ordered);

  const ChainReport orth = rgh_refined_chain({1, 0}, {0, 1}, 2);
  EXPECT_EQ(orth.left, 0.0);
  EXPECT_TRUE(orth.ordered);
  EXPECT_LE(orth.middle, 1.0);

  const ChainReport c = rgh_refined_chain({1, 2, 3}, {3, 1, 2}, 4);
  EXPECT_NEAR(c.left, oracle::kRghLeft, 1e-14);
  EXPECT_NEAR(c.middle, oracle::kRghMiddle, 1e-14);
  EXPECT_LT(c.left, c.middle);
  EXPECT_LT(c.middle, 1.0);

  EXPECT_THROW(rgh_refined_chain({0, 0}, {1, 1}, 2), DegenerateError);
  EXPECT_THROW(rgh_refined_chain({1}, {1, 2}, 2), PreconditionError);
}

TEST(RefinedHoelder, ChainOnRandomVectors) {
  Sampler rng(35);
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = 1 + rng.below(50);
    std::vector<double> a(n), b(n);
    for (std::size_t k = 0; k < n; ++k) {
      a[k] = rng.log_uniform(1e-3, 1e3);
      b[k] = rng.log_uniform(1e-3, 1e3);
    }
    const ChainReport c = rgh_refined_chain(a, b, rng.uniform(2.0, 8.0));
    EXPECT_TRUE(c.ordered) << c.slack_left << " " << c.slack_right;
  }
}

}  // namespace
}  // namespace ineq
