#pragma once

namespace l1lab {

// Left-hand side of the weak-threshold characterization for general x:
//   (1-beta) sqrt(2/pi) exp(-erfinv(x)^2) / alpha - sqrt(2) erfinv(x),  x = (1-alpha)/(1-beta).
// Negative means alpha is below the weak threshold for this beta.
double weak_residual(double alpha, double beta);

// alpha_w in (beta, 1) solving weak_residual(alpha_w, beta) = 0.
// Throws DomainError for beta outside (0,1), NoSignChange if no bracket is found.
double weak_alpha_of_beta(double beta);

// Inverse map: the largest beta whose weak alpha does not exceed alpha.
double weak_beta_of_alpha(double alpha);

}  // namespace l1lab
