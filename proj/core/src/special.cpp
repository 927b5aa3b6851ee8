#include "l1lab/numerics/special.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "l1lab/error.hpp"

namespace l1lab::num {

double erf(double x) noexcept { return std::erf(x); }
double erfc(double x) noexcept { return std::erfc(x); }

double erfcx(double x) noexcept {
  if (x < 5.0) return std::exp(x * x) * std::erfc(x);
  // Continued fraction erfc(x) = exp(-x^2)/sqrt(pi) / (x + (1/2)/(x + (2/2)/(x + ...))).
  double t = x;
  for (int n = 60; n >= 1; --n) t = x + 0.5 * n / t;
  return 1.0 / (kSqrtPi * t);
}

double log_erfc(double x) noexcept {
  if (x < 0.5) return std::log(std::erfc(x));
  return std::log(erfcx(x)) - x * x;
}

double log_erfc_diff(double lo, double hi) noexcept {
  constexpr double inf = std::numeric_limits<double>::infinity();
  if (!(lo < hi)) return -inf;
  if (lo >= 0.0) {
    const double a = log_erfc(lo);
    if (hi == inf) return a;
    return a + std::log1p(-std::exp(log_erfc(hi) - a));
  }
  if (hi <= 0.0) {
    // erfc(lo) - erfc(hi) = erfc(-hi) - erfc(-lo)
    const double a = log_erfc(-hi);
    if (lo == -inf) return a;
    return a + std::log1p(-std::exp(log_erfc(-lo) - a));
  }
  return std::log(std::erf(hi) - std::erf(lo));
}

double erfinv(double p) {
  if (!(std::fabs(p) < 1.0)) {
    throw Error(ErrorCode::DomainError, "erfinv argument must lie in (-1, 1), got " + std::to_string(p));
  }
  if (p == 0.0) return 0.0;
  const double a = std::fabs(p);
  // Rational initial guess (Giles), then Newton on erf. Near |p| = 1 the
  // residual is formed from erfc so the tail keeps its relative precision.
  double w = -std::log((1.0 - a) * (1.0 + a));
  double x;
  if (w < 5.0) {
    w -= 2.5;
    double q = 2.81022636e-08;
    q = 3.43273939e-07 + q * w;
    q = -3.5233877e-06 + q * w;
    q = -4.39150654e-06 + q * w;
    q = 0.00021858087 + q * w;
    q = -0.00125372503 + q * w;
    q = -0.00417768164 + q * w;
    q = 0.246640727 + q * w;
    q = 1.50140941 + q * w;
    x = q * a;
  } else {
    w = std::sqrt(w) - 3.0;
    double q = -0.000200214257;
    q = 0.000100950558 + q * w;
    q = 0.00134934322 + q * w;
    q = -0.00367342844 + q * w;
    q = 0.00573950773 + q * w;
    q = -0.0076224613 + q * w;
    q = 0.00943887047 + q * w;
    q = 1.00167406 + q * w;
    q = 2.83297682 + q * w;
    x = q * a;
  }
  const double tail = 1.0 - a;
  for (int it = 0; it < 6; ++it) {
    const double residual = a > 0.5 ? tail - std::erfc(x) : std::erf(x) - a;
    const double slope = 2.0 / kSqrtPi * std::exp(-x * x);
    const double step = residual / slope;
    x -= step;
    if (it >= 1 && std::fabs(step) <= 1e-15 * std::fabs(x)) break;
  }
  return p < 0 ? -x : x;
}

double normal_pdf(double x) noexcept { return std::exp(-0.5 * x * x) / kSqrt2Pi; }

double normal_cdf(double x) noexcept { return 0.5 * std::erfc(-x / kSqrt2); }

double log_add(double a, double b) noexcept {
  if (a == -std::numeric_limits<double>::infinity()) return b;
  if (b == -std::numeric_limits<double>::infinity()) return a;
  const double m = std::fmax(a, b);
  return m + std::log1p(std::exp(-std::fabs(a - b)));
}

}  // namespace l1lab::num
