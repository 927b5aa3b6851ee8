#include "l1lab/general/strong.hpp"

#include <algorithm>
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

void check_params(const LiftParams& p) {
  if (!(p.c3 > 0.0) || !(p.gamma > 0.5 * p.c3) || !(p.nu1 >= 0.0) || !(p.nu2 >= 0.0)) {
    throw Error(ErrorCode::ConstraintViolated, "strong set term needs c3 > 0, gamma > c3/2, nu1, nu2 >= 0");
  }
}

void check_beta(double beta) {
  if (!(beta > 0.0 && beta <= 0.5)) {
    throw Error(ErrorCode::DomainError, "strong kinds need 0 < beta <= 0.5, got " + std::to_string(beta));
  }
}

struct Coefficients {
  double p, q, r, r1;
};

Coefficients coefficients(const LiftParams& s) {
  const double p = s.c3 / (4.0 * s.gamma);
  const double q = s.c3 * s.nu1 / (2.0 * s.gamma);
  const double r = s.c3 * (s.nu1 * s.nu1 / (4.0 * s.gamma) - s.nu2);
  const double r1 = s.c3 * (s.nu1 * s.nu1 / (4.0 * s.gamma) + s.nu2);
  return {p, q, r, r1};
}

}  // namespace

StrongIntegrand make_strong_integrand(const LiftParams& params) {
  const double n1sq = params.nu1 * params.nu1;
  int regime = 3;
  if (n1sq < 2.0 * params.gamma * params.nu2) {
    regime = 1;
  } else if (n1sq < 8.0 * params.gamma * params.nu2) {
    regime = 2;
  }
  return {params.nu1, params.nu2, params.gamma, regime};
}

double strong_t_integrand(double h, const StrongIntegrand& s) {
  const double a = std::fabs(h);
  const double g4 = 4.0 * s.gamma_s;
  if (a >= s.nu1) return (h * h + s.nu1 * s.nu1) / g4 + std::fabs(a * s.nu1 / (2.0 * s.gamma_s) - s.nu2s);
  return std::max((a + s.nu1) * (a + s.nu1) / g4 - s.nu2s, s.nu2s);
}

double strong_log_moment(const LiftParams& params) {
  check_params(params);
  const auto [p, q, r, r1] = coefficients(params);
  const StrongIntegrand s = make_strong_integrand(params);
  const double n1 = params.nu1, n2 = params.nu2, g = params.gamma, c3 = params.c3;
  // Integrate over h >= 0 and double; t is even in h.
  double half;
  if (s.regime == 1) {
    // constant c3 nu2 on [0, nu1], lower branch on [nu1, x1], upper branch beyond x1.
    const double x1 = n1 > 0.0 ? 2.0 * g * n2 / n1 : kInf;
    half = log_gauss_exp_piece(p, q, r, x1, kInf);
    half = num::log_add(half, log_gauss_exp_piece(p, -q, r1, n1, x1));
    half = num::log_add(half, c3 * n2 + log_normal_mass(0.0, n1));
  } else {
    const double x2 = s.regime == 2 ? std::sqrt(8.0 * g * n2) - n1 : 0.0;
    half = log_gauss_exp_piece(p, q, r, std::max(x2, 0.0), kInf);
    if (x2 > 0.0) half = num::log_add(half, c3 * n2 + log_normal_mass(0.0, x2));
  }
  return std::log(2.0) + half;
}

double strong_moment_printed(const LiftParams& params) {
  check_params(params);
  const auto [p, q, r, r1] = coefficients(params);
  const StrongIntegrand s = make_strong_integrand(params);
  const double n1 = params.nu1, n2 = params.nu2, g = params.gamma, c3 = params.c3;
  const double sa = std::sqrt(0.5 - p);
  const double dd = q / std::sqrt(2.0 * (1.0 - 2.0 * p));
  const double k = 1.0 / (2.0 * num::kSqrt2);
  const double c1 = std::exp(dd * dd + r) / sa;
  if (s.regime == 1) {
    const double x1 = n1 > 0.0 ? 2.0 * g * n2 / n1 : kInf;
    const double c12 = std::exp(dd * dd + r1) / sa;
    const double i11 = c1 * k * std::erfc(x1 * sa - dd);
    const double i12 = c12 * k * (std::erfc(n1 * sa + dd) - std::erfc(x1 * sa + dd));
    const double i2 = 0.5 * std::exp(c3 * n2) * std::erf(n1 / num::kSqrt2);
    return 2.0 * (i11 + i12 + i2);
  }
  const double x2 = std::sqrt(8.0 * g * n2) - n1;
  const double i1 = c1 * k * std::erfc(n1 * sa - dd);
  const double i21 = 0.5 * std::exp(c3 * n2) * std::erf(x2 / num::kSqrt2);
  if (s.regime == 2) {
    const double i22 = c1 * k * (std::erfc(x2 * sa - dd) - std::erfc(n1 * sa - dd));
    return 2.0 * (i1 + i21 + i22);
  }
  const double i22 = c1 * k * (std::erfc(-dd) - std::erfc(n1 * sa - dd));
  return 2.0 * (i1 + i21 + i22);
}

double strong_set_term_lifted(double beta, const LiftParams& params) {
  return params.nu2 * (2.0 * beta - 1.0) + params.gamma + strong_log_moment(params) / params.c3;
}

SetTermIntegrand strong_integrand(double beta, const LiftParams& params) {
  check_params(params);
  const StrongIntegrand s = make_strong_integrand(params);
  const double p = params.c3 / (4.0 * params.gamma);
  const double mode = params.c3 * params.nu1 / (2.0 * params.gamma) / (1.0 - 2.0 * p);
  SetTermIntegrand out;
  out.linear = params.nu2 * (2.0 * beta - 1.0) + params.gamma;
  out.growth = p;
  std::vector<double> bps{-params.nu1, params.nu1, 0.0};
  if (s.regime == 1 && params.nu1 > 0.0) {
    const double x1 = 2.0 * params.gamma * params.nu2 / params.nu1;
    bps.insert(bps.end(), {-x1, x1});
  } else if (s.regime == 2) {
    const double x2 = std::sqrt(8.0 * params.gamma * params.nu2) - params.nu1;
    bps.insert(bps.end(), {-x2, x2});
  }
  out.terms.push_back({1.0, [s](double h) { return strong_t_integrand(h, s); }, bps, {-mode, 0.0, mode}});
  return out;
}

double strong_direct_value(double beta, double nu) {
  check_beta(beta);
  const double c = num::kSqrt2 * num::erfinv(1.0 - beta);
  double v = shifted_second_moment(std::max(c, 0.0), kInf, nu);
  if (nu < c) v += shifted_second_moment(nu, c, -nu);
  return 2.0 * v;
}

double strong_direct_closed_form(double beta, double nu) {
  check_beta(beta);
  const double e = num::erfinv(1.0 - beta);
  return (1.0 + nu * nu) * std::erfc(nu / num::kSqrt2) +
         4.0 * nu / num::kSqrt2Pi * (2.0 * std::exp(-e * e) - 0.5 * std::exp(-0.5 * nu * nu));
}

double strong_direct_closed_form_printed(double beta, double nu) {
  check_beta(beta);
  const double e = num::erfinv(1.0 - beta);
  return (1.0 + nu * nu) * std::erfc(nu / num::kSqrt2) +
         4.0 * nu / num::kSqrt2Pi * (2.0 * std::exp(-e * e) - 0.5 * std::exp(-0.5 * nu));
}

DirectMinimum strong_direct_minimum(double beta) {
  check_beta(beta);
  const auto m = num::minimize_scalar([beta](double nu) { return std::sqrt(strong_direct_value(beta, nu)); }, 0.0, 10.0);
  return {m.x, m.value};
}

bool strong_condition_direct(double beta, double alpha) {
  return strong_direct_minimum(beta).value < std::sqrt(alpha);
}

}  // namespace l1lab
