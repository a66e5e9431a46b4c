#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "bohr/scalar.hpp"
#include "support/random.hpp"

namespace bohr {
namespace {

// Explicit coefficients of (a - z) / (1 - a z).
std::vector<double> mobius_coefficients(double a, std::size_t count) {
  std::vector<double> c(count);
  c[0] = a;
  double power = 1.0;
  for (std::size_t k = 1; k < count; ++k) {
    c[k] = -(1.0 - a * a) * power;
    power *= a;
  }
  return c;
}

TEST(ScalarBohrSum, Constant) {
  const auto s = CoeffSeries::make({Complex{1.0}});
  for (double r : {0.0, 0.3, 0.99}) EXPECT_EQ(scalar_bohr_sum(s, r), 1.0);
}

TEST(ScalarBohrSum, MobiusClosedForm) {
  const auto s = mobius_series(0.9);
  EXPECT_NEAR(scalar_bohr_sum(s, 0.4), 1.01875, 1e-12);
  EXPECT_NEAR(scalar_bohr_sum(s, 1.0 / 3.0), 0.990476, 1e-6);
  EXPECT_NEAR(scalar_bohr_sum(s, 1.0 / 3.0), 0.9 + 0.19 * (1.0 / 3.0) / (1.0 - 0.3), 1e-14);
}

TEST(ScalarBohrSum, MatchesExplicitSummation) {
  for (double a : {0.0, 0.3, 0.5, 0.9, 0.99}) {
    const auto c = mobius_coefficients(a, 500);
    for (double r : {0.1, 1.0 / 3.0, 0.4, 0.6}) {
      double sum = 0.0;
      for (std::size_t k = 0; k < c.size(); ++k) sum += std::abs(c[k]) * std::pow(r, static_cast<double>(k));
      EXPECT_NEAR(scalar_bohr_sum(mobius_series(a), r), sum, 1e-12) << a << " " << r;
    }
  }
}

TEST(ScalarBohrSum, Errors) {
  const auto s = mobius_series(0.5);
  EXPECT_THROW((void)scalar_bohr_sum(s, 1.0), Error);
  EXPECT_THROW((void)scalar_bohr_sum(s, -0.1), Error);
  EXPECT_THROW((void)mobius_series(1.0), Error);
  EXPECT_THROW((void)CoeffSeries::make({Complex{1.0}}, CoeffSeries::Geometric{Complex{1.0}, Complex{0.0, 1.0}}), Error);
  EXPECT_THROW((void)CoeffSeries::make({Complex{NAN}}), Error);
}

TEST(SupNorm, Examples) {
  EXPECT_NEAR(sup_norm_estimate(CoeffSeries::make({Complex{0.0}, Complex{1.0}})), 1.0, 1e-15);
  EXPECT_NEAR(sup_norm_estimate(CoeffSeries::make({Complex{1.0}, Complex{1.0}})), 2.0, 1e-6);
  EXPECT_NEAR(sup_norm_estimate(mobius_series(0.9), 4096), 1.0, 1e-6);
  EXPECT_THROW((void)sup_norm_estimate(mobius_series(0.9), 7), Error);
}

TEST(SupNorm, CircleEvaluationMatchesExplicitSum) {
  const double a = 0.7;
  const auto c = mobius_coefficients(a, 400);
  for (double angle : {0.0, 0.4, 1.9, 3.0, 5.5}) {
    Complex direct{};
    for (std::size_t k = 0; k < c.size(); ++k) direct += c[k] * std::polar(1.0, angle * static_cast<double>(k));
    EXPECT_NEAR(std::abs(evaluate_on_circle(mobius_series(a), angle) - direct), 0.0, 1e-12);
  }
}

TEST(SupNorm, BlaschkeFactorsHaveUnitModulus) {
  for (double a : {0.0, 0.2, 0.5, 0.8, 0.95})
    for (int j = 0; j < 64; ++j)
      EXPECT_NEAR(std::abs(evaluate_on_circle(mobius_series(a), 0.1 * j)), 1.0, 1e-12);
}

// Refining by doubling keeps every earlier grid point, so the estimate cannot decrease.
TEST(SupNorm, MonotoneUnderGridRefinement) {
  testing::Rng rng(60);
  for (int t = 0; t < 50; ++t) {
    std::vector<Complex> coeffs(rng.order(1, 12));
    for (auto& a : coeffs) a = rng.complex_normal();
    const auto s = CoeffSeries::make(coeffs);
    double previous = 0.0;
    for (std::size_t g = 8; g <= 4096; g *= 2) {
      const double est = sup_norm_estimate(s, g);
      EXPECT_GE(est, previous);
      previous = est;
    }
  }
}

TEST(ClassicalVerify, Examples) {
  const auto m = mobius_series(0.9);
  const auto at_third = classical_verify(m, 1.0 / 3.0);
  EXPECT_TRUE(at_third.holds);
  EXPECT_NEAR(at_third.lhs, 0.990476, 1e-6);
  const auto at_04 = classical_verify(m, 0.4);
  EXPECT_FALSE(at_04.holds);
  EXPECT_NEAR(at_04.lhs, 1.01875, 1e-12);
  EXPECT_TRUE(classical_verify(CoeffSeries::make({Complex{1.0}}), 0.99).holds);
}

TEST(ClassicalVerify, RandomPolynomialsAtOneThird) {
  testing::Rng rng(61);
  for (int t = 0; t < 500; ++t) {
    std::vector<Complex> coeffs(rng.order(1, 15));
    double total = 0.0;
    for (auto& a : coeffs) {
      a = rng.complex_normal();
      total += std::abs(a);
    }
    const double scale = rng.uniform(0.1, 1.0) / total;
    for (auto& a : coeffs) a *= scale;
    const auto s = CoeffSeries::make(coeffs);
    for (double r : {0.0, 0.1, 0.25, 1.0 / 3.0}) EXPECT_TRUE(classical_verify(s, r, 512).holds) << t << " " << r;
  }
}

TEST(ScalarCriticalRadius, MobiusCrossing) {
  double previous = 1.0;
  for (double a : {0.5, 0.7, 0.9, 0.99}) {
    const double r = scalar_critical_radius(mobius_series(a), 1.0);
    EXPECT_NEAR(r, 1.0 / (1.0 + 2.0 * a), 1e-9) << a;
    EXPECT_LT(r, previous);
    previous = r;
  }
  EXPECT_NEAR(scalar_critical_radius(mobius_series(0.999999), 1.0), 1.0 / 3.0, 1e-6);
}

TEST(ScalarCriticalRadius, EdgeCases) {
  EXPECT_EQ(scalar_critical_radius(CoeffSeries::make({Complex{1.0}}), 1.0), 1.0);
  EXPECT_THROW((void)scalar_critical_radius(CoeffSeries::make({Complex{2.0}}), 1.0), Error);
  const auto s = CoeffSeries::make({Complex{0.0}}, CoeffSeries::Geometric{Complex{1.0}, Complex{0.5}});
  EXPECT_NEAR(scalar_critical_radius(s, 1.0), 2.0 / 3.0, 1e-9);
}

}  // namespace
}  // namespace bohr
