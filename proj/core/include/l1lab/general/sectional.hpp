#pragma once

#include "l1lab/lift/oracle.hpp"
#include "l1lab/lift/types.hpp"

namespace l1lab {

// I1 = E exp(b (|h| + nu)^2), I2 = E exp(b max(|h| - nu, 0)^2), b = c3/(4 gamma).
struct SectionalIntegrals {
  double b = 0.0;
  double nu = 0.0;
  double i1 = 0.0;
  double i2 = 0.0;
};

// Closed forms in linear space:
//   I1 = e^{b nu^2/(1-2b)}/sqrt(1-2b) (1 + erf(sqrt(2) b nu / sqrt(1-2b)))
//   I2 = e^{b nu^2/(1-2b)}/sqrt(1-2b) erfc(nu / sqrt(2(1-2b))) + erf(nu/sqrt(2))
// Throws ConstraintViolated unless 0 <= b < 1/2.
SectionalIntegrals sectional_integrals(double b, double nu);

// Same quantities as logs, stable for large exponents.
struct SectionalLogIntegrals {
  double log_i1 = 0.0;
  double log_i2 = 0.0;
};
SectionalLogIntegrals sectional_log_integrals(double b, double nu);

// sqrt(beta (nu^2 + 1 + 2 sqrt(2/pi) nu) + (1-beta)(erfc(nu/sqrt2)(1+nu^2) - 2 nu phi(nu))),
// i.e. the square root of E max over the sectional set, at fixed nu.
// Throws NegativeRadicand if the radicand is negative.
double sectional_set_term_direct(double beta, double nu);

struct DirectMinimum {
  double nu = 0.0;
  double value = 0.0;
};
// Minimum over nu in [0, 10] of sectional_set_term_direct.
DirectMinimum sectional_direct_minimum(double beta);

// gamma + beta/c3 log I1 + (1-beta)/c3 log I2 at the given point (nu = params.nu1).
// Throws ConstraintViolated unless gamma > c3/2.
double sectional_set_term_lifted(double beta, const LiftParams& params);

// The same set term expressed for exp_set_term_oracle.
SetTermIntegrand sectional_integrand(double beta, const LiftParams& params);

}  // namespace l1lab
