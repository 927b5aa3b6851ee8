#pragma once

// Reference computations for the tests. They share no code with the library:
// long double series, plain composite Simpson rules and brute-force scans.

#include <cmath>
#include <functional>
#include <limits>

namespace oracle {

inline long double pi() { return 3.141592653589793238462643383279502884L; }

// erf by its Maclaurin series (|x| <= 3) and erfc by a Lentz continued
// fraction beyond that.
inline long double erfc_cf(long double x) {
  // erfc(x) = exp(-x^2)/sqrt(pi) * 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + ...))))
  const long double tiny = 1e-300L;
  long double f = x, c = x, d = 0.0L;
  for (int k = 1; k < 400; ++k) {
    const long double a = k * 0.5L;
    d = x + a * d;
    if (std::fabs(d) < tiny) d = tiny;
    c = x + a / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0L / d;
    const long double delta = c * d;
    f *= delta;
    if (std::fabs(delta - 1.0L) < 1e-19L) break;
  }
  return std::exp(-x * x) / std::sqrt(pi()) / f;
}

inline long double erf_ref(long double x) {
  if (std::fabs(x) >= 2.0L) return x > 0 ? 1.0L - erfc_cf(x) : erfc_cf(-x) - 1.0L;
  long double term = x, sum = x;
  for (int n = 1; n < 200; ++n) {
    term *= -x * x / n;
    const long double add = term / (2 * n + 1);
    sum += add;
    if (std::fabs(add) < 1e-22L) break;
  }
  return 2.0L / std::sqrt(pi()) * sum;
}

inline long double erfc_ref(long double x) { return x >= 2.0L ? erfc_cf(x) : 1.0L - erf_ref(x); }

// Composite Simpson of g(h) phi(h) over [lo, hi].
inline double simpson_gauss(const std::function<double(double)>& g, double lo, double hi, int intervals = 200000) {
  if (intervals % 2) ++intervals;
  const long double h = (static_cast<long double>(hi) - lo) / intervals;
  long double sum = 0.0L;
  for (int i = 0; i <= intervals; ++i) {
    const long double x = lo + i * h;
    const long double w = (i == 0 || i == intervals) ? 1.0L : (i % 2 ? 4.0L : 2.0L);
    sum += w * g(static_cast<double>(x)) * std::exp(-x * x / 2) / std::sqrt(2 * pi());
  }
  return static_cast<double>(sum * h / 3.0L);
}

// E h^k for standard normal h.
inline double gauss_moment(int k) {
  if (k % 2) return 0.0;
  double m = 1.0;
  for (int j = k - 1; j > 1; j -= 2) m *= j;
  return m;
}

// max over gamma < 0 of gamma + (alpha/c3) log E exp(-t g^2), t = -c3/(4 gamma),
// with the chi-square moment E exp(-t g^2) taken by Simpson quadrature.
inline double sphere_grid_max(double c3, double alpha) {
  auto value = [&](double gamma) {
    const double t = -c3 / (4.0 * gamma);
    const double m = simpson_gauss([t](double g) { return std::exp(-t * g * g); }, -12.0, 12.0, 4000);
    return gamma + alpha / c3 * std::log(m);
  };
  double best_g = -1.0, best = -std::numeric_limits<double>::infinity();
  for (int i = 1; i <= 400; ++i) {
    const double g = -4.0 * i / 400.0;
    const double v = value(g);
    if (v > best) best = v, best_g = g;
  }
  // Golden-section refinement around the grid winner.
  double a = best_g - 0.01, b = std::min(best_g + 0.01, -1e-6);
  const double r = (std::sqrt(5.0) - 1.0) / 2.0;
  for (int it = 0; it < 100; ++it) {
    const double x1 = b - r * (b - a), x2 = a + r * (b - a);
    if (value(x1) > value(x2)) b = x2;
    else a = x1;
  }
  return value(0.5 * (a + b));
}

}  // namespace oracle
