#pragma once

#include "l1lab/general/sectional.hpp"
#include "l1lab/lift/oracle.hpp"
#include "l1lab/lift/types.hpp"

namespace l1lab {

// Derived coefficients of the nonnegative strong integrand:
//   p = c3/(4 gamma), q = -c3 nu1/(2 gamma), r = c3 (nu1^2/(4 gamma) - nu2),
//   r1 = c3 (nu1^2/(4 gamma) + nu2), d = q/sqrt(2(1-2p)),
//   b = (nu1 - sqrt(8 gamma nu2)) sqrt(1/2 - p), a = nu1 sqrt(1/2 - p).
struct NonnegStrongParams {
  double c3 = 0.0;
  double gamma = 0.0;
  double nu1 = 0.0;
  double nu2s = 0.0;
  double p_plus = 0.0;
  double q_plus = 0.0;
  double r_plus = 0.0;
  double r1_plus = 0.0;
  double d_plus = 0.0;
  double b_plus = 0.0;
  double a_plus = 0.0;

  // Left breakpoint nu1 - sqrt(8 gamma nu2).
  double left_break() const;
};

// Throws ConstraintViolated unless c3 > 0, p < 1/2 and nu1, nu2 >= 0.
NonnegStrongParams make_nonneg_params(const LiftParams& params);

// h <= nu1 - sqrt(8 gamma nu2): (h - nu1)^2/(4 gamma) - nu2
// middle:                       nu2
// h >= nu1:                     (h - nu1)^2/(4 gamma) + nu2
double nonneg_t_integrand(double h, const NonnegStrongParams& s);

// The three pieces of E exp(c3 t(h)): left tail, constant middle, right tail.
struct NonnegPieces {
  double i1 = 0.0;
  double i2 = 0.0;
  double i3 = 0.0;
  double sum() const { return i1 + i2 + i3; }
};

// Pieces derived from the Gaussian integrals (linear space).
NonnegPieces nonneg_pieces(const NonnegStrongParams& s);
// Pieces as printed in the source derivation: the two tail pieces lack the
// factor 1/(2 sqrt 2) that a Gaussian tail integral carries.
NonnegPieces nonneg_pieces_printed(const NonnegStrongParams& s);

// log E exp(c3 t(h)) in log space.
double strong_nonneg_log_moment(const NonnegStrongParams& s);

// nu2 (2 beta - 1) + gamma + log(E exp(c3 t)) / c3.
double strong_nonneg_set_term_lifted(double beta, const LiftParams& params);

SetTermIntegrand strong_nonneg_integrand(double beta, const LiftParams& params);

// Direct nonnegative strong quantity at fixed nu:
//   int_{h <= c} (h - nu)^2 phi + int_{h >= nu} (h - nu)^2 phi,  c = -sqrt2 erfinv(1 - 2 beta).
// The condition is min_nu value < alpha.
double strong_nonneg_direct_value(double beta, double nu);

// S1 + S2 + S3 closed form of the same quantity.
struct NonnegDirectTerms {
  double s1 = 0.0;
  double s2 = 0.0;
  double s3 = 0.0;
  double sum() const { return s1 + s2 + s3; }
};
NonnegDirectTerms strong_nonneg_direct_terms(double beta, double nu);
// S1 as printed reads e^{-nu/2} in place of e^{-nu^2/2}.
NonnegDirectTerms strong_nonneg_direct_terms_printed(double beta, double nu);

// Minimum over nu in [0, 10] of strong_nonneg_direct_value.
DirectMinimum strong_nonneg_direct_minimum(double beta);

// Alternate direct evaluator built on the fixed point theta in (0, 1 - beta) of
//   sqrt(1/2pi) (e^{-E(theta)^2} - e^{-E(beta)^2}) / (theta + beta) - sqrt2 E(theta) = 0,
// E(x) = erfinv(1 - 2x). Returns the alpha above which recovery is guaranteed.
// Report-only: the threshold machinery uses strong_nonneg_direct_value.
double strong_nonneg_alternate_alpha(double beta);

}  // namespace l1lab
