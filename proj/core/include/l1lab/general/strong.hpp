#pragma once

#include "l1lab/general/sectional.hpp"
#include "l1lab/lift/oracle.hpp"
#include "l1lab/lift/types.hpp"

namespace l1lab {

// Piecewise integrand of the strong set term, with the regime that decides
// which closed form applies:
//   1: nu1^2 < 2 gamma nu2
//   2: 2 gamma nu2 <= nu1^2 < 8 gamma nu2
//   3: nu1^2 >= 8 gamma nu2
struct StrongIntegrand {
  double nu1 = 0.0;
  double nu2s = 0.0;
  double gamma_s = 0.0;
  int regime = 3;
};

StrongIntegrand make_strong_integrand(const LiftParams& params);

// |h| >= nu1: (h^2 + nu1^2)/(4 gamma) + | |h| nu1/(2 gamma) - nu2 |
// |h| <= nu1: max((|h| + nu1)^2/(4 gamma) - nu2, nu2)
double strong_t_integrand(double h, const StrongIntegrand& s);

// log E exp(c3 t(h)), closed form per regime, evaluated in log space.
double strong_log_moment(const LiftParams& params);

// The same expectation from the closed forms as printed in the source
// derivation, in linear space. In regime 3 the printed sum carries an extra
// constant-region term erf((sqrt(8 gamma nu2) - nu1)/sqrt 2) e^{c3 nu2}/2 whose
// interval has negative length there; strong_log_moment drops it.
double strong_moment_printed(const LiftParams& params);

// nu2 (2 beta - 1) + gamma + log(E exp(c3 t)) / c3.
// Throws ConstraintViolated unless gamma > c3/2 and nu1, nu2 >= 0.
double strong_set_term_lifted(double beta, const LiftParams& params);

SetTermIntegrand strong_integrand(double beta, const LiftParams& params);

// Direct strong quantity at fixed nu, from the Gaussian integrals
//   2 int_{h >= c} (h + nu)^2 phi + 2 int_{nu <= h < c} (h - nu)^2 phi,  c = sqrt2 erfinv(1 - beta).
// The condition is min_nu sqrt(value) < sqrt(alpha).
double strong_direct_value(double beta, double nu);

// Closed form of the same integrals, valid for nu <= c:
//   (1+nu^2) erfc(nu/sqrt2) + 4 nu/sqrt(2 pi) (2 e^{-erfinv(1-beta)^2} - e^{-nu^2/2}/2)
double strong_direct_closed_form(double beta, double nu);

// The closed form as printed, whose last exponent reads e^{-nu/2}.
double strong_direct_closed_form_printed(double beta, double nu);

// Minimum over nu in [0, 10] of sqrt(strong_direct_value).
DirectMinimum strong_direct_minimum(double beta);

bool strong_condition_direct(double beta, double alpha);

}  // namespace l1lab
