#include <gtest/gtest.h>

#include <cmath>
#include <complex>

#include "ineq/cbs_discrete.hpp"
#include "ineq/cbs_integral.hpp"
#include "ineq/dft.hpp"
#include "ineq/errors.hpp"
#include "ineq/random.hpp"
#include "oracles.hpp"

namespace ineq {
namespace {

using Vec = std::vector<double>;

std::pair<Vec, Vec> random_vectors(Sampler& rng, std::size_t n) {
  Vec x(n), y(n);
  for (std::size_t k = 0; k < n; ++k) {
    x[k] = rng.log_uniform(kSampleLo, kSampleHi);
    y[k] = rng.log_uniform(kSampleLo, kSampleHi);
  }
  return {x, y};
}

double milne_middle(const Vec& x, const Vec& y) {
  double s1 = 0.0;
  double s2 = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    const double a = x[k] * x[k];
    const double b = y[k] * y[k];
    s1 += a + b;
    s2 += a * b / (a + b);
  }
  return s1 * s2;
}

double callebaut_middle(const Vec& x, const Vec& y, double alpha) {
  double s1 = 0.0;
  double s2 = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    s1 += std::pow(x[k], 1 + alpha) * std::pow(y[k], 1 - alpha);
    s2 += std::pow(x[k], 1 - alpha) * std::pow(y[k], 1 + alpha);
  }
  return s1 * s2;
}

TEST(CbsChain, MilneExample) {
  const ChainReport c = cbs_chain({1, 2}, {2, 1}, MeanSpec::power(2));
  EXPECT_NEAR(c.left, 16.0, 1e-13);
  EXPECT_NEAR(c.middle, 16.0, 1e-13);
  EXPECT_NEAR(c.right, 25.0, 1e-13);
  EXPECT_TRUE(c.ordered);
}

TEST(CbsChain, EqualVectorsCollapse) {
  const Vec x = {0.3, 2.0, 7.5};
  for (const MeanSpec& s : mean_catalog()) {
    const ChainReport c = cbs_chain(x, x, s);
    EXPECT_NEAR(c.middle, c.left, 1e-13 * c.left) << to_string(s);
    EXPECT_NEAR(c.right, c.left, 1e-13 * c.left) << to_string(s);
  }
}

TEST(CbsChain, CallebautExample) {
  const Vec x = {1, 2, 3};
  const Vec y = {3, 2, 1};
  const double m = cbs_middle(x, y, MeanSpec::weighted_geometric(0.75, 0.25));
  EXPECT_NEAR(m, callebaut_middle(x, y, 0.5), 1e-12 * m);
}

TEST(CbsChain, RejectsBadVectors) {
  EXPECT_THROW(cbs_chain({1, 2}, {1}, MeanSpec::power(1)), PreconditionError);
  EXPECT_THROW(cbs_chain({}, {}, MeanSpec::power(1)), PreconditionError);
  EXPECT_THROW(cbs_chain({1, 0}, {1, 1}, MeanSpec::power(1)), PreconditionError);
}

TEST(CbsProperty, ChainHoldsForCatalog) {
  Sampler rng(41);
  for (const MeanSpec& s : mean_catalog()) {
    const std::size_t pairs = s.family() == Family::Iterated ? 200 : 2000;
    for (std::size_t i = 0; i < pairs; ++i) {
      const auto [x, y] = random_vectors(rng, 1 + rng.below(100));
      const ChainReport c = cbs_chain(x, y, s);
      ASSERT_TRUE(c.ordered) << to_string(s) << " " << c.slack_left << " " << c.slack_right;
    }
  }
}

TEST(CbsProperty, MilneMatchesHandFormula) {
  Sampler rng(42);
  for (int i = 0; i < 2000; ++i) {
    const auto [x, y] = random_vectors(rng, 1 + rng.below(50));
    const double expected = milne_middle(x, y);
    EXPECT_NEAR(cbs_middle(x, y, MeanSpec::power(2)), expected, 1e-12 * expected);
  }
}

TEST(CbsProperty, CallebautFamily) {
  Sampler rng(43);
  for (double alpha : {0.0, 0.25, 0.5, 0.75, 1.0}) {
    const auto spec = MeanSpec::weighted_geometric((1 + alpha) / 2, (1 - alpha) / 2);
    for (int i = 0; i < 500; ++i) {
      const auto [x, y] = random_vectors(rng, 1 + rng.below(50));
      const ChainReport c = cbs_chain(x, y, spec);
      EXPECT_TRUE(c.ordered);
      EXPECT_NEAR(c.middle, callebaut_middle(x, y, alpha), 1e-12 * c.middle);
      if (alpha == 0.0) EXPECT_NEAR(c.middle, c.left, 1e-12 * c.left);
    }
  }
}

std::vector<std::pair<double, double>> log_grid(int n) {
  std::vector<std::pair<double, double>> g;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      g.emplace_back(std::pow(10.0, -3 + 6.0 * i / (n - 1)), std::pow(10.0, -3 + 6.0 * j / (n - 1)));
    }
  }
  return g;
}

TEST(CdeCheck, MeanPairs) {
  const auto grid = log_grid(50);
  const CdeReport milne = cde_check(MeanSpec::power(2), grid);
  EXPECT_TRUE(milne.ok());
  EXPECT_GT(milne.checks, 0u);
  EXPECT_TRUE(cde_check(MeanSpec::min(), grid).ok());
}

TEST(CdeCheck, BrokenPairIsCaught) {
  const auto grid = log_grid(10);
  const CdeReport r = cde_check([](double x, double y) { return 1.1 * x * x * y * y; },
                                [](double, double) { return 1.0; }, grid);
  ASSERT_FALSE(r.ok());
  bool saw_product = false;
  for (const auto& v : r.violations) saw_product |= v.condition == 1;
  EXPECT_TRUE(saw_product);
}

TEST(Dft, SmallCases) {
  using C = std::complex<double>;
  const auto delta = dft_uncertainty({C(1), C(0), C(0), C(0)});
  EXPECT_EQ(delta.A, 1u);
  EXPECT_EQ(delta.B, 4u);
  EXPECT_TRUE(delta.equality);
  const auto flat = dft_uncertainty({C(1), C(1), C(1), C(1)});
  EXPECT_EQ(flat.A, 4u);
  EXPECT_EQ(flat.B, 1u);
  EXPECT_TRUE(flat.equality);
  const auto half = dft_uncertainty({C(1), C(1), C(0), C(0)});
  EXPECT_EQ(half.A, 2u);
  EXPECT_EQ(half.B, 3u);
  EXPECT_EQ(half.product, 6u);
  EXPECT_TRUE(half.holds);
  EXPECT_FALSE(half.equality);
  EXPECT_THROW(dft_uncertainty({C(0), C(0)}), DegenerateError);
}

TEST(DftProperty, ExhaustiveBinaryVectors) {
  for (std::size_t n = 1; n <= 12; ++n) {
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      std::vector<std::complex<double>> a(n);
      for (std::size_t k = 0; k < n; ++k) a[k] = (mask >> k) & 1u;
      const auto r = dft_uncertainty(a);
      ASSERT_TRUE(r.holds) << "n " << n << " mask " << mask;
    }
  }
}

TEST(DftProperty, Parseval) {
  Sampler rng(44);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 1 + rng.below(64);
    std::vector<std::complex<double>> a(n);
    double ea = 0.0;
    for (auto& v : a) {
      v = {rng.uniform(-1, 1), rng.uniform(-1, 1)};
      ea += std::norm(v);
    }
    double eb = 0.0;
    for (const auto& v : dft(a)) eb += std::norm(v);
    EXPECT_NEAR(eb, ea, 1e-12 * std::max(1.0, ea));
  }
}

TEST(Lorentz, Examples) {
  const Vec x = {1.0, 0.5};
  const ChainReport same = lorentz_chain(2.0, x, 2.0, x, MeanSpec::power(2));
  const double v = (4.0 - 1.25) * (4.0 - 1.25);
  EXPECT_NEAR(same.left, v, 1e-13);
  EXPECT_NEAR(same.middle, v, 1e-13);
  EXPECT_NEAR(same.right, v, 1e-13);

  const ChainReport c = lorentz_chain(2, {1, 1}, 3, {1, 2}, MeanSpec::power(2));
  EXPECT_TRUE(c.reversed);
  EXPECT_TRUE(c.ordered);
  EXPECT_NEAR(c.left, 9.0, 1e-13);
  EXPECT_NEAR(c.right, 8.0, 1e-13);
  EXPECT_GE(c.left, c.middle);
  EXPECT_GE(c.middle, c.right);

  const double lambda = 1.7;
  const ChainReport s = lorentz_chain(2 * lambda, {lambda, lambda}, 3 * lambda,
                                      {lambda, 2 * lambda}, MeanSpec::power(2));
  const double l4 = std::pow(lambda, 4);
  EXPECT_NEAR(s.left, l4 * c.left, 1e-12 * s.left);
  EXPECT_NEAR(s.middle, l4 * c.middle, 1e-12 * s.middle);
  EXPECT_NEAR(s.right, l4 * c.right, 1e-12 * s.right);

  EXPECT_THROW(lorentz_chain(1, {1, 1}, 3, {1, 2}, MeanSpec::power(2)), PreconditionError);
}

TEST(LorentzProperty, ReversedChainOnRandomPairs) {
  Sampler rng(45);
  const auto catalog = mean_catalog();
  for (int i = 0; i < 10000; ++i) {
    const std::size_t n = 1 + rng.below(8);
    auto [x, y] = random_vectors(rng, n);
    double sx = 0.0;
    double sy = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      sx += x[k] * x[k];
      sy += y[k] * y[k];
    }
    const double x0 = std::sqrt(sx) * rng.uniform(1.0001, 3.0);
    const double y0 = std::sqrt(sy) * rng.uniform(1.0001, 3.0);
    const MeanSpec& s = catalog[i % catalog.size()];
    const ChainReport c = lorentz_chain(x0, x, y0, y, s);
    ASSERT_TRUE(c.ordered) << to_string(s) << " " << c.slack_left << " " << c.slack_right;
  }
}

TEST(Jackson, Integrals) {
  EXPECT_NEAR(q_jackson_integral(FunctionSpec::poly({1}), 0.3), 1.0, 1e-14);
  EXPECT_NEAR(q_jackson_integral(FunctionSpec::poly({1}), 0.9), 1.0, 1e-13);
  EXPECT_NEAR(q_jackson_integral(FunctionSpec::power(1), 0.5), 2.0 / 3.0, 1e-14);
  EXPECT_NEAR(q_jackson_integral(FunctionSpec::power(2), 0.999), 1.0 / 3.0, 1e-2);
  EXPECT_THROW(q_jackson_integral(FunctionSpec::power(1), 1.0), ParameterError);
}

TEST(Jackson, Chains) {
  const auto one = FunctionSpec::poly({1});
  const auto t = FunctionSpec::power(1);
  const ChainReport c = q_cbs_chain(one, t, 0.5, MeanSpec::power(2));
  EXPECT_TRUE(c.ordered);
  EXPECT_NEAR(c.left, oracle::kQLeft, 1e-14);
  EXPECT_NEAR(c.middle, oracle::kQMiddle, 1e-14);
  EXPECT_NEAR(c.right, oracle::kQRight, 1e-14);

  const auto e = FunctionSpec::exp(0.7);
  const ChainReport same = q_cbs_chain(e, e, 0.6, MeanSpec::rado(0));
  EXPECT_NEAR(same.middle, same.left, 1e-13 * same.left);
  EXPECT_NEAR(same.right, same.left, 1e-13 * same.left);

  const auto f = FunctionSpec::poly({1});
  const auto g = FunctionSpec::affine(2, -1);
  const ChainReport q = q_cbs_chain(f, g, 0.99, MeanSpec::power(2));
  const ChainReport i = integral_mean_chain(f, g, 0, 1, MeanSpec::power(2));
  EXPECT_NEAR(q.left, i.left, 1e-2 * i.left);
  EXPECT_NEAR(q.middle, i.middle, 1e-2 * i.middle);
  EXPECT_NEAR(q.right, i.right, 1e-2 * i.right);
}

}  // namespace
}  // namespace ineq
