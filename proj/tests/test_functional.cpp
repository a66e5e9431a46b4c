#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "bohr/functional.hpp"
#include "bohr/radius_search.hpp"
#include "bohr/witnesses.hpp"
#include "support/random.hpp"

namespace bohr {
namespace {

// Independent oracle: sums the first `terms` terms of sum_{m>=0} |alpha_m| r^m explicitly.
double explicit_sum(double alpha0, double c, double r, int terms) {
  double s = alpha0;
  for (int m = 1; m <= terms; ++m) s += c * std::pow(r, m);
  return s;
}

TEST(AlphaSeries, Examples) {
  auto s = alpha_series(general_witness(3));
  EXPECT_DOUBLE_EQ(s.alpha0, 3.0);
  EXPECT_EQ(s.tail, AlphaSeries::Tail::constant);
  EXPECT_DOUBLE_EQ(s.tail_value, 4.0);

  s = alpha_series(three_by_three_witness());
  EXPECT_DOUBLE_EQ(s.alpha0, 6.0);
  EXPECT_NEAR(s.tail_value, 4.0 * std::numbers::sqrt2, 1e-14);

  const BohrInstance zero{ComplexMatrix(3), ComplexMatrix(3), SequenceSpec::constant(ComplexMatrix::shift(3)),
                          HypothesisMode::theorem};
  s = alpha_series(zero);
  EXPECT_EQ(s.alpha0, 0.0);
  EXPECT_EQ(s.tail_value, 0.0);
}

TEST(AlphaSeries, FiniteListGivesExplicitMagnitudes) {
  const auto a = ComplexMatrix::from_rows({{1.0, 3.0}, {0.0, 1.0}});
  const BohrInstance inst{a, ComplexMatrix::identity(2) * Complex{3.0},
                          SequenceSpec::finite_list({ComplexMatrix::shift(2), ComplexMatrix::shift(2) * Complex{0.0, 0.5}}),
                          HypothesisMode::theorem};
  const auto s = alpha_series(inst);
  EXPECT_EQ(s.tail, AlphaSeries::Tail::zero);
  ASSERT_EQ(s.magnitudes.size(), 2u);
  EXPECT_DOUBLE_EQ(s.magnitudes[0], 3.0);
  EXPECT_DOUBLE_EQ(s.magnitudes[1], 1.5);
  EXPECT_DOUBLE_EQ(bohr_sum(s, 0.5), 2.0 + 3.0 * 0.5 + 1.5 * 0.25);
}

TEST(AlphaSeries, Errors) {
  const BohrInstance nonreal{ComplexMatrix::from_rows({{Complex{1.0, 1.0}}}), ComplexMatrix::identity(1),
                             SequenceSpec::finite_list({}), HypothesisMode::theorem};
  try {
    (void)alpha_series(nonreal);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonrealTrace);
  }
  const BohrInstance negative{ComplexMatrix::from_rows({{-1.0}}), ComplexMatrix::identity(1),
                              SequenceSpec::finite_list({}), HypothesisMode::theorem};
  try {
    (void)alpha_series(negative);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NegativeTrace);
  }
  EXPECT_THROW(AlphaSeries::make(-1.0, {}), Error);
}

TEST(BohrSum, Examples) {
  const auto n3 = AlphaSeries::constant_tail(6.0, 4.0 * std::numbers::sqrt2);
  EXPECT_NEAR(bohr_sum(n3, std::numbers::sqrt2 - 1.0), 10.0, 1e-13);

  const auto g4 = AlphaSeries::constant_tail(4.0, 6.0);
  EXPECT_NEAR(bohr_sum(g4, 1.0 / 3.0), 7.0, 1e-14);
  EXPECT_NEAR(explicit_sum(4.0, 6.0, 1.0 / 3.0, 200), 7.0, 1e-13);

  EXPECT_EQ(bohr_sum(g4, 0.0), 4.0);
  EXPECT_THROW((void)bohr_sum(g4, 1.0), Error);
  EXPECT_THROW((void)bohr_sum(g4, -0.1), Error);
}

TEST(BohrSum, ConstantTailClosedFormMatchesExplicitSummation) {
  testing::Rng rng(20);
  for (int t = 0; t < 100; ++t) {
    const double a0 = rng.uniform(0.0, 5.0);
    const double c = rng.uniform(0.0, 5.0);
    const double r = rng.uniform(0.0, 0.8);
    EXPECT_NEAR(bohr_sum(AlphaSeries::constant_tail(a0, c), r), explicit_sum(a0, c, r, 400), 1e-11);
  }
}

TEST(BohrSum, MonotoneInRadius) {
  testing::Rng rng(21);
  for (int t = 0; t < 200; ++t) {
    std::vector<double> mags(rng.order(0, 6));
    for (auto& m : mags) m = rng.uniform(0.0, 3.0);
    const auto s = AlphaSeries::make(rng.uniform(0.0, 2.0), mags, AlphaSeries::Tail::constant,
                                     rng.uniform(0.0, 2.0), mags.size() + 1);
    double r1 = rng.uniform(0.0, 0.99), r2 = rng.uniform(0.0, 0.99);
    if (r1 > r2) std::swap(r1, r2);
    EXPECT_LE(bohr_sum(s, r1), bohr_sum(s, r2));
  }
}

TEST(CriticalRadius, Examples) {
  for (int n : {2, 3, 5}) {
    const auto s = AlphaSeries::constant_tail(n, 2.0 * (n - 1));
    EXPECT_NEAR(critical_radius(s, 2.0 * n), n / (3.0 * n - 2.0), 1e-11) << "n = " << n;
  }
  EXPECT_NEAR(critical_radius(AlphaSeries::constant_tail(6.0, 4.0 * std::numbers::sqrt2), 10.0),
              std::numbers::sqrt2 - 1.0, 1e-11);
  EXPECT_EQ(critical_radius(AlphaSeries::constant_tail(0.0, 0.0), 0.0), 1.0);
  EXPECT_EQ(critical_radius(AlphaSeries::make(1.0, {0.5}), 5.0), 1.0);
}

TEST(CriticalRadius, BudgetBelowAlpha0) {
  try {
    (void)critical_radius(AlphaSeries::constant_tail(3.0, 1.0), 2.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BudgetBelowAlpha0);
  }
}

TEST(CriticalRadius, ThresholdConsistency) {
  testing::Rng rng(22);
  const double tol = kRadiusTol;
  for (int t = 0; t < 300; ++t) {
    std::vector<double> mags(rng.order(0, 5));
    for (auto& m : mags) m = rng.uniform(0.0, 3.0);
    const double a0 = rng.uniform(0.0, 3.0);
    const auto s = AlphaSeries::make(a0, mags, AlphaSeries::Tail::constant, rng.uniform(0.1, 3.0), mags.size() + 1);
    const double budget = a0 + rng.uniform(0.01, 5.0);
    const double r = critical_radius(s, budget, tol);
    ASSERT_LT(r, 1.0);
    EXPECT_TRUE(check_inequality(s, budget, std::max(0.0, r - 2.0 * tol), 0.0).holds);
    EXPECT_FALSE(check_inequality(s, budget, r + 2.0 * tol, 0.0).holds);
  }
}

TEST(CheckInequality, Examples) {
  auto c = check_inequality(general_witness(3), 1.0 / 3.0);
  EXPECT_TRUE(c.holds);
  EXPECT_NEAR(c.lhs, 5.0, 1e-14);
  EXPECT_DOUBLE_EQ(c.rhs, 6.0);

  c = check_inequality(three_by_three_witness(), 0.45);
  EXPECT_FALSE(c.holds);
  EXPECT_NEAR(c.lhs, 6.0 + 4.0 * std::numbers::sqrt2 * 0.45 / 0.55, 1e-12);
  EXPECT_NEAR(c.lhs, 10.628, 1e-3);

  const BohrInstance zero{ComplexMatrix(2), ComplexMatrix(2), SequenceSpec::constant(ComplexMatrix::shift(2)),
                          HypothesisMode::theorem};
  c = check_inequality(zero, 0.3);
  EXPECT_TRUE(c.holds);
  EXPECT_EQ(c.slack, 0.0);
}

TEST(CheckInequality, ScaleEquivariance) {
  testing::Rng rng(23);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = rng.order(2, 5);
    std::vector<double> v(parameter_length(n));
    for (auto& x : v) x = rng.normal();
    const auto [p, m] = parameterize(n, v);
    const auto inst = materialize(p, m, rng.uniform(0.0, 2.0));
    const double scale = rng.uniform(0.1, 10.0);
    const BohrInstance scaled{inst.a * Complex{scale}, inst.s * Complex{scale}, inst.seq, inst.mode};
    const double r = rng.uniform(0.0, 0.9);
    const auto c1 = check_inequality(inst, r);
    const auto c2 = check_inequality(scaled, r);
    EXPECT_NEAR(c2.lhs, scale * c1.lhs, 1e-10 * std::max(1.0, c2.lhs));
    EXPECT_NEAR(c2.rhs, scale * c1.rhs, 1e-10 * std::max(1.0, c2.rhs));
    EXPECT_NEAR(critical_radius(scaled), critical_radius(inst), 1e-9);
  }
}

}  // namespace
}  // namespace bohr
