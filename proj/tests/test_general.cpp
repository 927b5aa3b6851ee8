#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "l1lab/error.hpp"
#include "l1lab/general/sectional.hpp"
#include "l1lab/general/strong.hpp"
#include "l1lab/general/weak.hpp"
#include "l1lab/lift/oracle.hpp"
#include "l1lab/numerics/special.hpp"
#include "oracles/oracles.hpp"

using namespace l1lab;

namespace {

// Independent transcription of the strong piecewise integrand.
double strong_t_ref(double h, double nu1, double nu2, double gamma) {
  const double a = std::fabs(h);
  if (a >= nu1) return (h * h + nu1 * nu1) / (4 * gamma) + std::fabs(a * nu1 / (2 * gamma) - nu2);
  return std::max((a + nu1) * (a + nu1) / (4 * gamma) - nu2, nu2);
}

}  // namespace

TEST(Weak, Limits) {
  EXPECT_LT(weak_alpha_of_beta(1e-4), 0.05);
  EXPECT_GT(weak_alpha_of_beta(0.999), 0.99);
}

TEST(Weak, KnownValues) {
  EXPECT_NEAR(weak_alpha_of_beta(0.1), 0.32879, 1e-4);
  EXPECT_NEAR(weak_alpha_of_beta(0.2), 0.51113, 1e-4);
  EXPECT_NEAR(weak_alpha_of_beta(0.05), 0.20390, 1e-4);
  EXPECT_NEAR(weak_alpha_of_beta(0.5), 0.83130, 1e-4);
}

TEST(Weak, ResidualAtRootAndMonotone) {
  double prev = 0.0;
  for (int i = 1; i <= 50; ++i) {
    const double beta = i / 51.0;
    const double a = weak_alpha_of_beta(beta);
    EXPECT_LE(std::fabs(weak_residual(a, beta)), 1e-10);
    EXPECT_GT(a, beta);
    EXPECT_GT(a, prev);
    prev = a;
  }
}

TEST(Weak, InverseRoundTrip) {
  for (double alpha = 0.05; alpha < 0.96; alpha += 0.05) {
    const double beta = weak_beta_of_alpha(alpha);
    EXPECT_NEAR(weak_alpha_of_beta(beta), alpha, 1e-6);
    EXPECT_LE(std::fabs(weak_residual(alpha, beta)), 1e-9);
  }
}

TEST(Weak, DomainErrors) {
  EXPECT_THROW(weak_alpha_of_beta(0.0), Error);
  EXPECT_THROW(weak_alpha_of_beta(1.0), Error);
}

TEST(Sectional, DirectExamples) {
  EXPECT_NEAR(sectional_set_term_direct(0.1, 0.0), 1.0, 1e-14);
  EXPECT_LT(sectional_set_term_direct(0.0, 6.0), 0.01);
  EXPECT_NEAR(sectional_direct_minimum(0.0481).value, std::sqrt(0.3), 2e-4);
}

TEST(Sectional, DirectMatchesQuadrature) {
  for (double beta : {0.05, 0.3, 0.8})
    for (double nu : {0.0, 0.4, 1.3, 3.0}) {
      const double q = oracle::simpson_gauss(
          [&](double h) {
            const double a = std::fabs(h), m = std::fmax(a - nu, 0.0);
            return beta * (a + nu) * (a + nu) + (1 - beta) * m * m;
          },
          -14, 14);
      EXPECT_NEAR(std::pow(sectional_set_term_direct(beta, nu), 2), q, 1e-10);
    }
}

TEST(Sectional, IntegralsMatchSimpson) {
  for (double b : {0.01, 0.2, 0.4})
    for (double nu : {0.0, 0.5, 2.0}) {
      const SectionalIntegrals s = sectional_integrals(b, nu);
      const double i1 = oracle::simpson_gauss([&](double h) { return std::exp(b * std::pow(std::fabs(h) + nu, 2)); }, -30, 30, 600000);
      const double i2 = oracle::simpson_gauss([&](double h) { return std::exp(b * std::pow(std::fmax(std::fabs(h) - nu, 0.0), 2)); }, -30, 30, 600000);
      EXPECT_NEAR(s.i1 / i1, 1.0, 1e-8) << b << " " << nu;
      EXPECT_NEAR(s.i2 / i2, 1.0, 1e-8) << b << " " << nu;
      const SectionalLogIntegrals l = sectional_log_integrals(b, nu);
      EXPECT_NEAR(l.log_i1, std::log(s.i1), 1e-12);
      EXPECT_NEAR(l.log_i2, std::log(s.i2), 1e-12);
    }
}

TEST(Sectional, NuZeroCollapses) {
  for (double b : {0.05, 0.3}) {
    const SectionalIntegrals s = sectional_integrals(b, 0.0);
    EXPECT_NEAR(s.i1, 1.0 / std::sqrt(1 - 2 * b), 1e-13);
    EXPECT_NEAR(s.i2, 1.0 / std::sqrt(1 - 2 * b), 1e-13);
  }
}

TEST(Sectional, LiftedRejectsGammaAtBound) {
  try {
    sectional_set_term_lifted(0.1, {1.0, 0.5, 1.0, 0.0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ConstraintViolated);
  }
}

TEST(Sectional, LargeExponentsStayFinite) {
  // b close to 1/2 with a large shift overflows the linear form but not the log form.
  const LiftParams p{50.0, 25.0 + 1e-3, 6.0, 0.0};
  EXPECT_TRUE(std::isfinite(sectional_set_term_lifted(0.3, p)));
}

TEST(StrongIntegrand, Examples) {
  EXPECT_DOUBLE_EQ(strong_t_integrand(0.0, make_strong_integrand({1.0, 1.0, 0.0, 0.3})), 0.3);
  EXPECT_DOUBLE_EQ(strong_t_integrand(2.0, make_strong_integrand({1.0, 0.5, 1.0, 0.1})), 4.4);
  EXPECT_NEAR(strong_t_ref(2.0, 1.0, 0.1, 0.5), 4.4, 1e-15);
}

TEST(StrongIntegrand, MatchesReferenceAndIsContinuous) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 300; ++i) {
    const double gamma = 0.1 + 2 * u(rng), nu1 = 3 * u(rng), nu2 = 2 * u(rng);
    const StrongIntegrand s = make_strong_integrand({1.0, gamma, nu1, nu2});
    for (double h = -6; h <= 6; h += 0.173) EXPECT_NEAR(strong_t_integrand(h, s), strong_t_ref(h, nu1, nu2, gamma), 1e-14);
    for (double edge : {nu1, -nu1, 2 * gamma * nu2 / std::max(nu1, 1e-12), std::sqrt(8 * gamma * nu2) - nu1}) {
      const double left = strong_t_integrand(edge - 1e-12, s);
      EXPECT_NEAR(left, strong_t_integrand(edge + 1e-12, s), 1e-10 * std::max(1.0, std::fabs(left))) << edge;
    }
  }
}

TEST(StrongIntegrand, RegimeBoundaries) {
  // nu1^2 = 2 gamma nu2 and nu1^2 = 8 gamma nu2.
  const double gamma = 0.5, nu2 = 1.0;
  EXPECT_EQ(make_strong_integrand({1.0, gamma, std::sqrt(2 * gamma * nu2) - 1e-9, nu2}).regime, 1);
  EXPECT_EQ(make_strong_integrand({1.0, gamma, std::sqrt(2 * gamma * nu2) + 1e-9, nu2}).regime, 2);
  EXPECT_EQ(make_strong_integrand({1.0, gamma, std::sqrt(8 * gamma * nu2) - 1e-9, nu2}).regime, 2);
  EXPECT_EQ(make_strong_integrand({1.0, gamma, std::sqrt(8 * gamma * nu2) + 1e-9, nu2}).regime, 3);
  // The moment is continuous across both boundaries.
  for (double r : {2.0, 8.0}) {
    const double nu1 = std::sqrt(r * gamma * nu2);
    const double lo = strong_log_moment({0.7, gamma, nu1 * (1 - 1e-9), nu2});
    const double hi = strong_log_moment({0.7, gamma, nu1 * (1 + 1e-9), nu2});
    EXPECT_NEAR(lo, hi, 1e-7);
  }
}

TEST(StrongLifted, ClosedFormMatchesSimpsonInEveryRegime) {
  const double c3 = 0.6, gamma = 0.9;
  for (double nu1 : {0.2, 0.9, 1.8, 3.0}) {
    for (double nu2 : {0.0, 0.15, 0.6, 1.5}) {
      const LiftParams p{c3, gamma, nu1, nu2};
      const StrongIntegrand s = make_strong_integrand(p);
      const double ref = oracle::simpson_gauss([&](double h) { return std::exp(c3 * strong_t_ref(h, nu1, nu2, gamma)); },
                                               -40, 40, 800000);
      EXPECT_NEAR(strong_log_moment(p), std::log(ref), 1e-8) << "regime " << s.regime;
    }
  }
}

TEST(StrongLifted, PrintedRegime3SumCarriesExtraTerm) {
  // The printed regime-3 sum keeps the constant-region term
  // exp(c3 nu2) erf(x2 / sqrt 2) although x2 < 0 there; regimes 1 and 2 agree.
  const LiftParams r3{0.6, 0.9, 3.0, 0.3};
  ASSERT_EQ(make_strong_integrand(r3).regime, 3);
  const double x2 = std::sqrt(8 * 0.9 * 0.3) - 3.0;
  const double extra = std::exp(0.6 * 0.3) * std::erf(x2 / std::sqrt(2.0));
  EXPECT_LT(extra, -1e-2);
  EXPECT_NEAR(strong_moment_printed(r3) - std::exp(strong_log_moment(r3)), extra, 1e-12);
  const LiftParams r2{0.6, 0.9, 1.5, 0.5};
  ASSERT_EQ(make_strong_integrand(r2).regime, 2);
  EXPECT_NEAR(strong_moment_printed(r2) / std::exp(strong_log_moment(r2)), 1.0, 1e-10);
}

TEST(StrongLifted, Nu2ZeroAgreesWithOracle) {
  const LiftParams p{0.8, 1.1, 1.2, 0.0};
  const double closed = strong_set_term_lifted(0.2, p);
  const double quad = exp_set_term_oracle(strong_integrand(0.2, p), p, {10.0, 64, 1e-11, 1 << 14});
  EXPECT_NEAR(closed, quad, 1e-8 * std::max(1.0, std::fabs(quad)));
}

TEST(StrongDirect, IntegralAndClosedForm) {
  // nu = 1 would hide the printed exp(-nu/2) typo, since nu = nu^2 there.
  const double beta = 0.1, nu = 1.5;
  const double c = num::kSqrt2 * num::erfinv(1 - beta);
  ASSERT_GT(c, nu);
  // Even integrand with a jump at |h| = c: integrate each smooth piece and double.
  const double q = 2 * (oracle::simpson_gauss([&](double h) { return (h - nu) * (h - nu); }, nu, c, 400000) +
                        oracle::simpson_gauss([&](double h) { return (h + nu) * (h + nu); }, c, 14, 400000));
  EXPECT_NEAR(strong_direct_value(beta, nu), q, 1e-8 * q);
  EXPECT_NEAR(strong_direct_closed_form(beta, nu), q, 1e-8 * q);
  EXPECT_GT(std::fabs(strong_direct_closed_form_printed(beta, nu) - q), 1e-3);
}

TEST(StrongDirect, SmallBetaLimit) {
  EXPECT_LT(strong_direct_minimum(1e-9).value, 0.05);
  EXPECT_TRUE(strong_condition_direct(1e-6, 0.05));
  EXPECT_FALSE(strong_condition_direct(0.3, 0.5));
}

TEST(StrongDirect, SmallC3LimitOfLiftedTerm) {
  // min over (gamma, nu1, nu2) of the lifted term at c3 = 1e-6 tends to the direct value.
  for (double beta : {0.05, 0.2}) {
    const double direct = strong_direct_minimum(beta).value;
    // At c3 -> 0 the optimal nu2 is c nu1 / (2 gamma), c the upper beta-quantile of |h|.
    const double c = num::kSqrt2 * num::erfinv(1 - beta);
    double best = INFINITY;
    const double c3 = 1e-6;
    for (double s = 0.2; s < 1.5; s *= 1.02)
      for (double nu1 = 0.0; nu1 < 3.0; nu1 += 0.02)
        for (double k : {0.9, 0.95, 1.0, 1.05, 1.1})
          best = std::min(best, strong_set_term_lifted(beta, {c3, c3 / 2 + s, nu1, k * c * nu1 / (2 * s)}));
    EXPECT_NEAR(best, direct, 2e-3) << beta;
    EXPECT_GE(best, direct - 1e-6) << beta;
  }
}
