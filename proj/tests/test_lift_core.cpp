#include <gtest/gtest.h>

#include <cmath>

#include "l1lab/error.hpp"
#include "l1lab/general/sectional.hpp"
#include "l1lab/lift/oracle.hpp"
#include "l1lab/lift/sphere.hpp"
#include "l1lab/lift/threshold.hpp"
#include "oracles/oracles.hpp"

using namespace l1lab;

TEST(Sphere, GammaHatExamples) {
  EXPECT_DOUBLE_EQ(sphere_gamma_hat(0.0, 1.0), -0.5);
  EXPECT_DOUBLE_EQ(sphere_gamma_hat(0.0, 0.25), -0.25);
  for (double c3 : {1e-3, 0.1, 1.0, 10.0, 100.0})
    for (double a : {0.01, 0.5, 1.0}) {
      const double g = sphere_gamma_hat(c3, a);
      EXPECT_LT(g, 0.0);
      EXPECT_NEAR(g, (2 * c3 - std::sqrt(4 * c3 * c3 + 16 * a)) / 8, 1e-12 * std::max(1.0, c3));
    }
}

TEST(Sphere, GammaHatIsStationary) {
  const double c3 = 1.0, a = 0.5;
  auto f = [&](double g) { return g - a / (2 * c3) * std::log(1 - c3 / (2 * g)); };
  const double g = sphere_gamma_hat(c3, a), h = 1e-6;
  EXPECT_LE(std::fabs((f(g + h) - f(g - h)) / (2 * h)), 1e-6);
  EXPECT_GE(f(g), f(g + 1e-3));
  EXPECT_GE(f(g), f(g - 1e-3));
}

TEST(Sphere, SmallC3Limit) {
  EXPECT_NEAR(i_sph(1e-8, 0.25), -0.5, 1e-6);
  EXPECT_NEAR(i_sph(1e-8, 1.0), -1.0, 1e-6);
  EXPECT_DOUBLE_EQ(i_sph(0.0, 0.49), -0.7);
  for (double a = 0.05; a < 0.96; a += 0.05) EXPECT_LE(std::fabs(i_sph(1e-6, a) + std::sqrt(a)), 1e-5) << a;
}

TEST(Sphere, MatchesGridMaximizationOracle) {
  EXPECT_NEAR(i_sph(0.5, 0.5), oracle::sphere_grid_max(0.5, 0.5), 1e-6);
  for (double c3 : {0.05, 0.3, 1.0, 2.5})
    for (double a : {0.1, 0.7}) EXPECT_NEAR(i_sph(c3, a), oracle::sphere_grid_max(c3, a), 1e-6) << c3 << " " << a;
}

TEST(Sphere, ValueIsNegativeAndFinite) {
  for (double c3 = 1e-4; c3 < 1e3; c3 *= 1.7)
    for (double a : {1e-3, 0.3, 1.0}) {
      const SphereTerm s = sphere_term(c3, a);
      EXPECT_TRUE(std::isfinite(s.value));
      EXPECT_LE(s.value, 0.0);
    }
}

TEST(MasterCondition, Examples) {
  const BoundEvaluation a = master_condition(0.0, 1e-8, 0.25);
  EXPECT_NEAR(a.total, -0.5, 1e-6);
  EXPECT_TRUE(a.feasible());
  const BoundEvaluation b = master_condition(1.0, 1e-8, 0.25);
  EXPECT_NEAR(b.total, 0.5, 1e-6);
  EXPECT_FALSE(b.feasible());
  const BoundEvaluation c = master_condition(0.3, 0.7, 0.4);
  EXPECT_DOUBLE_EQ(c.total, -0.35 + 0.3 + i_sph(0.7, 0.4));
}

TEST(MasterCondition, ContinuousInC3) {
  const LiftParams base{0.0, 1.2, 0.9, 0.0};
  double prev = NAN;
  for (double c3 = 0.01; c3 <= 2.0; c3 += 0.01) {
    LiftParams p = base;
    p.c3 = c3;
    const double t = lifted_evaluation(ThresholdKind::sectional, 0.5, 0.1, p).total;
    ASSERT_TRUE(std::isfinite(t)) << c3;
    if (!std::isnan(prev)) EXPECT_LT(std::fabs(t - prev), 0.05) << c3;
    prev = t;
  }
}

TEST(SetTermOracle, ConstantIntegrand) {
  SetTermIntegrand s;
  s.linear = 0.25;
  s.growth = 0.0;
  s.terms.push_back({1.0, [](double) { return 0.8; }, {}, {0.0}});
  EXPECT_NEAR(exp_set_term_oracle(s, {0.7, 1.0, 0.0, 0.0}), 0.25 + 0.8, 1e-12);
}

TEST(SetTermOracle, SectionalClosedFormAgrees) {
  const LiftParams p{0.5, 0.6, 1.0, 0.0};
  const double closed = sectional_set_term_lifted(0.1, p);
  const double quad = exp_set_term_oracle(sectional_integrand(0.1, p), p);
  EXPECT_NEAR(closed, quad, 1e-6 * std::fabs(quad));
}

TEST(SetTermOracle, RejectsGrowthAtOneHalf) {
  const LiftParams p{1.0, 0.5, 1.0, 0.0};
  SetTermIntegrand s;
  s.growth = 0.5;
  s.terms.push_back({1.0, [](double h) { return h * h / 2; }, {}, {0.0}});
  try {
    exp_set_term_oracle(s, p);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ConstraintViolated);
  }
}

TEST(SetTermOracle, SectionalSmallC3MatchesDirect) {
  // At c3 -> 0 the lifted term, minimized over
  // gamma, tends to the direct radicand's square root.
  for (double beta : {0.05, 0.2}) {
    for (double nu : {0.5, 1.5}) {
      const double c3 = 1e-6;
      double best = INFINITY;
      for (double s = 0.05; s < 3.0; s *= 1.01) best = std::min(best, sectional_set_term_lifted(beta, {c3, c3 / 2 + s, nu, 0.0}));
      EXPECT_NEAR(best, sectional_set_term_direct(beta, nu), 1e-4);
    }
  }
}

TEST(Threshold, SectionalExamples) {
  EXPECT_NEAR(threshold_bisect(0.5, ThresholdKind::sectional, BoundMethod::lifted).beta, 0.1045, 5e-4);
  EXPECT_NEAR(threshold_bisect(0.3, ThresholdKind::sectional, BoundMethod::direct).beta, 0.0481, 5e-4);
  EXPECT_NEAR(threshold_bisect(0.9999, ThresholdKind::sectional, BoundMethod::direct).beta, 0.4937, 5e-4);
  EXPECT_NEAR(threshold_bisect(0.9999, ThresholdKind::sectional, BoundMethod::lifted).beta, 0.4937, 5e-4);
}

TEST(Threshold, ResultInvariants) {
  for (auto kind : {ThresholdKind::sectional, ThresholdKind::strong, ThresholdKind::strong_nonneg}) {
    for (auto method : {BoundMethod::direct, BoundMethod::lifted}) {
      const ThresholdOptions o;
      const ThresholdResult r = threshold_bisect(0.6, kind, method, o);
      EXPECT_GT(r.beta, 0.0);
      EXPECT_LT(r.beta, is_strong(kind) ? 0.5 : 1.0);
      EXPECT_LE(r.condition_margin, 0.0);
      EXPECT_TRUE(r.monotone);
      EXPECT_EQ(r.kind, kind);
      EXPECT_EQ(r.method, method);
      // Infeasible one bisection width above.
      const double above = r.beta + o.tol_beta;
      const FeasibilityCheck f = method == BoundMethod::lifted ? lifted_feasibility(kind, 0.6, above, o, {r.params_at_optimum})
                                                               : direct_feasibility(kind, 0.6, above, o);
      EXPECT_FALSE(f.feasible) << to_string(kind) << " " << to_string(method);
      EXPECT_GT(f.margin, -o.feasibility_margin);
    }
  }
}

TEST(Threshold, OptimumSitsOnTheBoundary) {
  // At the returned beta the reported parameters certify a total just below zero.
  const ThresholdResult r = threshold_bisect(0.5, ThresholdKind::sectional, BoundMethod::lifted);
  const BoundEvaluation e = lifted_evaluation(ThresholdKind::sectional, 0.5, r.beta, r.params_at_optimum);
  EXPECT_LT(e.total, 0.0);
  EXPECT_NEAR(e.total, 0.0, 5e-3);
  EXPECT_NEAR(lifted_feasibility(ThresholdKind::sectional, 0.5, 0.1045).margin, 0.0, 5e-3);
  EXPECT_NEAR(lifted_feasibility(ThresholdKind::strong, 0.5, 0.04645).margin, 0.0, 5e-3);
  EXPECT_NEAR(lifted_feasibility(ThresholdKind::strong, 0.9, 0.1443).margin, 0.0, 5e-3);
  EXPECT_NEAR(lifted_feasibility(ThresholdKind::strong_nonneg, 0.9, 0.2577).margin, 0.0, 5e-3);
  EXPECT_NEAR(lifted_feasibility(ThresholdKind::strong_nonneg, 0.5, 0.0680).margin, 0.0, 5e-3);
}

TEST(Threshold, WeakKindsUseTheCharacterization) {
  const ThresholdResult r = threshold_bisect(0.5, ThresholdKind::weak, BoundMethod::lifted);
  EXPECT_NEAR(r.beta, 0.19264, 2e-3);
  EXPECT_EQ(threshold_bisect(0.5, ThresholdKind::weak, BoundMethod::direct).beta, r.beta);
  const ThresholdResult n = threshold_bisect(0.5, ThresholdKind::weak_nonneg, BoundMethod::direct);
  EXPECT_GT(n.beta, r.beta);
}

TEST(Threshold, RejectsBadInput) {
  auto code_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::NoSignChange;
  };
  EXPECT_EQ(code_of([] { threshold_bisect(1.5, ThresholdKind::sectional, BoundMethod::lifted); }), ErrorCode::DomainError);
  EXPECT_EQ(code_of([] { threshold_bisect(0.0, ThresholdKind::sectional, BoundMethod::lifted); }), ErrorCode::DomainError);
  ThresholdOptions o;
  o.tol_beta = 1e-6;
  EXPECT_EQ(code_of([&] { threshold_bisect(0.5, ThresholdKind::sectional, BoundMethod::lifted, o); }),
            ErrorCode::DomainError);
}
