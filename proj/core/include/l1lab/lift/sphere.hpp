#pragma once

#include "l1lab/lift/types.hpp"

namespace l1lab {

// Maximizer of the sphere-term objective in gamma: (2c3 - sqrt(4c3^2 + 16 alpha)) / 8.
double sphere_gamma_hat(double c3, double alpha);

// gamma_hat - alpha/(2 c3) * log(1 - c3/(2 gamma_hat)); at c3 = 0 returns the
// limit -sqrt(alpha).
double i_sph(double c3, double alpha);

SphereTerm sphere_term(double c3, double alpha);

// total = -c3/2 + i_set + i_sph(c3, alpha).
BoundEvaluation master_condition(double i_set, double c3, double alpha);

}  // namespace l1lab
