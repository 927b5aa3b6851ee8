#pragma once

namespace l1lab {

// Weak characterization for nonnegative x:
//   (1-beta) sqrt(1/(2 pi)) exp(-erfinv(x)^2) / alpha - sqrt(2) erfinv(x),
//   x = 2(1-alpha)/(1-beta) - 1.
double weak_nonneg_residual(double alpha, double beta);

double weak_nonneg_alpha_of_beta(double beta);

double weak_nonneg_beta_of_alpha(double alpha);

}  // namespace l1lab
