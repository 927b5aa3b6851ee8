#include "l1lab/general/sectional.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "l1lab/error.hpp"
#include "l1lab/lift/gaussian_piece.hpp"
#include "l1lab/numerics/minimize.hpp"
#include "l1lab/numerics/special.hpp"

namespace l1lab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_b(double b) {
  if (!(b >= 0.0 && b < 0.5)) {
    throw Error(ErrorCode::ConstraintViolated, "sectional integrals need 0 <= c3/(4 gamma) < 1/2, got " + std::to_string(b));
  }
}

double b_of(const LiftParams& params) {
  if (!(params.c3 > 0.0) || !(params.gamma > 0.5 * params.c3)) {
    throw Error(ErrorCode::ConstraintViolated, "sectional set term needs c3 > 0 and gamma > c3/2");
  }
  return params.c3 / (4.0 * params.gamma);
}

}  // namespace

SectionalIntegrals sectional_integrals(double b, double nu) {
  check_b(b);
  const double s = 1.0 - 2.0 * b;
  const double e = std::exp(b * nu * nu / s) / std::sqrt(s);
  const double i1 = e * (1.0 + std::erf(num::kSqrt2 * b * nu / std::sqrt(s)));
  const double i2 = e * std::erfc(nu / std::sqrt(2.0 * s)) + std::erf(nu / num::kSqrt2);
  return {b, nu, i1, i2};
}

SectionalLogIntegrals sectional_log_integrals(double b, double nu) {
  check_b(b);
  const double ln2 = std::log(2.0);
  // Both expectations are symmetric in h; integrate h >= 0 and double.
  const double log_i1 = ln2 + log_gauss_exp_piece(b, 2.0 * b * nu, b * nu * nu, 0.0, kInf);
  const double log_i2 = num::log_add(ln2 + log_gauss_exp_piece(b, -2.0 * b * nu, b * nu * nu, nu, kInf),
                                     log_normal_mass(-nu, nu));
  return {log_i1, log_i2};
}

double sectional_set_term_direct(double beta, double nu) {
  const double tail = std::erfc(nu / num::kSqrt2);
  const double radicand = beta * (nu * nu + 1.0 + 2.0 * std::sqrt(2.0 / num::kPi) * nu) +
                          (1.0 - beta) * (tail * (1.0 + nu * nu) - 2.0 * nu * num::normal_pdf(nu));
  if (radicand < 0.0) {
    // Tiny negative values come from cancellation at large nu with beta ~ 0.
    if (radicand > -1e-15) return 0.0;
    throw Error(ErrorCode::NegativeRadicand,
                "sectional direct radicand " + std::to_string(radicand) + " at beta=" + std::to_string(beta) +
                    ", nu=" + std::to_string(nu));
  }
  return std::sqrt(radicand);
}

DirectMinimum sectional_direct_minimum(double beta) {
  const auto m = num::minimize_scalar([beta](double nu) { return sectional_set_term_direct(beta, nu); }, 0.0, 10.0);
  return {m.x, m.value};
}

double sectional_set_term_lifted(double beta, const LiftParams& params) {
  const double b = b_of(params);
  const auto logs = sectional_log_integrals(b, params.nu1);
  return params.gamma + (beta * logs.log_i1 + (1.0 - beta) * logs.log_i2) / params.c3;
}

SetTermIntegrand sectional_integrand(double beta, const LiftParams& params) {
  const double b = b_of(params);
  const double g = params.gamma;
  const double nu = params.nu1;
  const double mode = 2.0 * b * nu / (1.0 - 2.0 * b);
  SetTermIntegrand out;
  out.linear = g;
  out.growth = b;
  out.terms.push_back({beta, [g, nu](double h) { return (std::fabs(h) + nu) * (std::fabs(h) + nu) / (4.0 * g); },
                       {0.0}, {-mode, mode}});
  out.terms.push_back({1.0 - beta,
                       [g, nu](double h) {
                         const double e = std::fmax(std::fabs(h) - nu, 0.0);
                         return e * e / (4.0 * g);
                       },
                       {-nu, nu}, {0.0}});
  return out;
}

}  // namespace l1lab
