#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "l1lab/error.hpp"
#include "l1lab/lift/gaussian_piece.hpp"
#include "l1lab/nonneg/strong.hpp"
#include "l1lab/numerics/minimize.hpp"
#include "l1lab/numerics/roots.hpp"
#include "l1lab/numerics/special.hpp"

namespace l1lab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_beta(double beta) {
  if (!(beta > 0.0 && beta <= 0.5)) {
    throw Error(ErrorCode::DomainError, "strong kinds need 0 < beta <= 0.5, got " + std::to_string(beta));
  }
}

}  // namespace

double NonnegStrongParams::left_break() const { return nu1 - std::sqrt(8.0 * gamma * nu2s); }

NonnegStrongParams make_nonneg_params(const LiftParams& params) {
  if (!(params.c3 > 0.0) || !(params.gamma > 0.5 * params.c3) || !(params.nu1 >= 0.0) || !(params.nu2 >= 0.0)) {
    throw Error(ErrorCode::ConstraintViolated, "nonnegative strong term needs c3 > 0, c3/(4 gamma) < 1/2, nu1, nu2 >= 0");
  }
  NonnegStrongParams s;
  s.c3 = params.c3;
  s.gamma = params.gamma;
  s.nu1 = params.nu1;
  s.nu2s = params.nu2;
  s.p_plus = params.c3 / (4.0 * params.gamma);
  s.q_plus = -params.c3 * params.nu1 / (2.0 * params.gamma);
  s.r_plus = params.c3 * (params.nu1 * params.nu1 / (4.0 * params.gamma) - params.nu2);
  s.r1_plus = params.c3 * (params.nu1 * params.nu1 / (4.0 * params.gamma) + params.nu2);
  s.d_plus = s.q_plus / std::sqrt(2.0 * (1.0 - 2.0 * s.p_plus));
  const double sa = std::sqrt(0.5 - s.p_plus);
  s.b_plus = s.left_break() * sa;
  s.a_plus = params.nu1 * sa;
  return s;
}

double nonneg_t_integrand(double h, const NonnegStrongParams& s) {
  const double g4 = 4.0 * s.gamma;
  const double base = (h * h + s.nu1 * s.nu1) / g4 - h * s.nu1 / (2.0 * s.gamma);
  if (h <= s.left_break()) return base - s.nu2s;
  if (h <= s.nu1) return s.nu2s;
  return base + s.nu2s;
}

NonnegPieces nonneg_pieces(const NonnegStrongParams& s) {
  const double sa = std::sqrt(0.5 - s.p_plus);
  const double k = 1.0 / (2.0 * num::kSqrt2);
  const double c1 = std::exp(s.d_plus * s.d_plus + s.r_plus) / sa;
  const double c3p = std::exp(s.d_plus * s.d_plus + s.r1_plus) / sa;
  NonnegPieces out;
  out.i1 = c1 * k * std::erfc(s.d_plus - s.b_plus);
  out.i2 = std::exp(s.c3 * s.nu2s) / 2.0 * (std::erfc(s.b_plus / num::kSqrt2 / sa) - std::erfc(s.nu1 / num::kSqrt2));
  out.i3 = c3p * k * std::erfc(s.a_plus - s.d_plus);
  return out;
}

NonnegPieces nonneg_pieces_printed(const NonnegStrongParams& s) {
  const double sa = std::sqrt(0.5 - s.p_plus);
  const double c1 = std::exp(s.d_plus * s.d_plus + s.r_plus) / sa;
  const double c3p = std::exp(s.d_plus * s.d_plus + s.r1_plus) / sa;
  NonnegPieces out;
  out.i1 = c1 * std::erfc(s.d_plus - s.b_plus);
  out.i2 = std::exp(s.c3 * s.nu2s) / 2.0 * (std::erfc(s.b_plus / num::kSqrt2 / sa) - std::erfc(s.nu1 / num::kSqrt2));
  out.i3 = c3p * std::erfc(s.a_plus - s.d_plus);
  return out;
}

double strong_nonneg_log_moment(const NonnegStrongParams& s) {
  const double lb = s.left_break();
  double v = log_gauss_exp_piece(s.p_plus, s.q_plus, s.r_plus, -kInf, lb);
  v = num::log_add(v, s.c3 * s.nu2s + log_normal_mass(lb, s.nu1));
  v = num::log_add(v, log_gauss_exp_piece(s.p_plus, s.q_plus, s.r1_plus, s.nu1, kInf));
  return v;
}

double strong_nonneg_set_term_lifted(double beta, const LiftParams& params) {
  const NonnegStrongParams s = make_nonneg_params(params);
  return params.nu2 * (2.0 * beta - 1.0) + params.gamma + strong_nonneg_log_moment(s) / params.c3;
}

SetTermIntegrand strong_nonneg_integrand(double beta, const LiftParams& params) {
  const NonnegStrongParams s = make_nonneg_params(params);
  const double mode = s.q_plus / (1.0 - 2.0 * s.p_plus);
  SetTermIntegrand out;
  out.linear = params.nu2 * (2.0 * beta - 1.0) + params.gamma;
  out.growth = s.p_plus;
  out.terms.push_back({1.0, [s](double h) { return nonneg_t_integrand(h, s); }, {s.left_break(), s.nu1},
                       {mode, 0.0}});
  return out;
}

double strong_nonneg_direct_value(double beta, double nu) {
  check_beta(beta);
  const double c = -num::kSqrt2 * num::erfinv(1.0 - 2.0 * beta);
  // beta <= 1/2 puts c <= 0 <= nu, so the two regions never overlap.
  return shifted_second_moment(-kInf, c, -nu) + shifted_second_moment(nu, kInf, -nu);
}

NonnegDirectTerms strong_nonneg_direct_terms(double beta, double nu) {
  check_beta(beta);
  const double e = num::erfinv(2.0 * (1.0 - beta) - 1.0);
  const double ee = std::exp(-e * e);
  const double tail = 0.5 * std::erfc(nu / num::kSqrt2);
  NonnegDirectTerms t;
  t.s1 = tail + nu / num::kSqrt2Pi * std::exp(-0.5 * nu * nu);
  t.s2 = 1.0 / (2.0 * num::kSqrt2Pi) * (2.0 * num::kSqrt2Pi * beta + 2.0 * num::kSqrt2 * e * ee);
  t.s3 = (tail + beta) * nu * nu + nu * std::sqrt(2.0 / num::kPi) * (ee - std::exp(-0.5 * nu * nu));
  return t;
}

NonnegDirectTerms strong_nonneg_direct_terms_printed(double beta, double nu) {
  NonnegDirectTerms t = strong_nonneg_direct_terms(beta, nu);
  t.s1 = 0.5 * std::erfc(nu / num::kSqrt2) + nu / num::kSqrt2Pi * std::exp(-0.5 * nu);
  return t;
}

DirectMinimum strong_nonneg_direct_minimum(double beta) {
  check_beta(beta);
  const auto m = num::minimize_scalar([beta](double nu) { return strong_nonneg_direct_value(beta, nu); }, 0.0, 10.0);
  return {m.x, m.value};
}

double strong_nonneg_alternate_alpha(double beta) {
  check_beta(beta);
  auto E = [](double x) { return num::erfinv(1.0 - 2.0 * x); };
  const double eb = E(beta);
  const double gb = std::exp(-eb * eb) / num::kSqrt2Pi;
  auto fixed_point = [&](double theta) {
    const double et = E(theta);
    return (std::exp(-et * et) / num::kSqrt2Pi - gb) / (theta + beta) - num::kSqrt2 * et;
  };
  const double hi = 1.0 - beta;
  const double theta = num::find_root(fixed_point, {hi * 1e-12, hi * (1.0 - 1e-12)}, 1e-14);
  const double et = E(theta);
  auto S = [](double x, double e) { return x + e * std::exp(-e * e) / num::kSqrtPi; };
  const double diff = std::exp(-et * et) / num::kSqrt2Pi - gb;
  return S(theta, et) + S(beta, eb) - diff * diff / (theta + beta);
}

}  // namespace l1lab
