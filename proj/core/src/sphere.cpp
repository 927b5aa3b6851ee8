#include "l1lab/lift/sphere.hpp"

#include <cmath>

#include "l1lab/error.hpp"

namespace l1lab {

double sphere_gamma_hat(double c3, double alpha) {
  if (!(c3 >= 0.0) || !(alpha >= 0.0)) throw Error(ErrorCode::DomainError, "sphere_gamma_hat needs c3, alpha >= 0");
  // Rationalized form of (2c3 - sqrt(4c3^2 + 16a))/8; avoids cancellation for large c3.
  return -2.0 * alpha / (2.0 * c3 + std::sqrt(4.0 * c3 * c3 + 16.0 * alpha));
}

double i_sph(double c3, double alpha) {
  if (c3 == 0.0) return -std::sqrt(alpha);
  const double g = sphere_gamma_hat(c3, alpha);
  return g - alpha / (2.0 * c3) * std::log1p(-c3 / (2.0 * g));
}

SphereTerm sphere_term(double c3, double alpha) {
  return {c3, alpha, sphere_gamma_hat(c3, alpha), i_sph(c3, alpha)};
}

BoundEvaluation master_condition(double i_set, double c3, double alpha) {
  const double s = i_sph(c3, alpha);
  return {c3, i_set, s, -0.5 * c3 + i_set + s};
}

}  // namespace l1lab
