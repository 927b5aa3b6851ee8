#include <cmath>
#include <functional>
#include <string>

#include "l1lab/error.hpp"
#include "l1lab/general/weak.hpp"
#include "l1lab/nonneg/weak.hpp"
#include "l1lab/numerics/roots.hpp"
#include "l1lab/numerics/special.hpp"

namespace l1lab {

namespace {

void check_fraction(double v, const char* name) {
  if (!(v > 0.0 && v < 1.0)) {
    throw Error(ErrorCode::DomainError, std::string(name) + " must lie in (0, 1), got " + std::to_string(v));
  }
}

double residual_with(double alpha, double beta, double coef, double x) {
  const double e = num::erfinv(x);
  return (1.0 - beta) * coef * std::exp(-e * e) / alpha - num::kSqrt2 * e;
}

// Root in alpha over (beta, 1). Both residuals tend to -inf as alpha -> beta+
// and are positive as alpha -> 1-, so the bracket is shrunk toward the ends
// until the sign change shows.
double solve_alpha(const std::function<double(double)>& f, double beta) {
  for (double eps = 1e-6; eps >= 1e-14; eps *= 1e-2) {
    const num::Bracket b{beta + (1.0 - beta) * eps, 1.0 - (1.0 - beta) * eps};
    if (!(b.lo < b.hi)) break;
    const double flo = f(b.lo), fhi = f(b.hi);
    if (flo < 0.0 && fhi > 0.0) return num::find_root(f, b, 1e-14);
  }
  throw Error(ErrorCode::NoSignChange,
              "weak characterization: no sign change on (beta, 1) for beta = " + std::to_string(beta));
}

// Largest beta in (0, alpha) with alpha_of_beta(beta) <= alpha.
double invert(const std::function<double(double)>& alpha_of_beta, double alpha) {
  check_fraction(alpha, "alpha");
  auto g = [&](double beta) { return alpha_of_beta(beta) - alpha; };
  const num::Bracket b{alpha * 1e-9, alpha * (1.0 - 1e-12)};
  double beta = num::find_root(g, b, 1e-13);
  while (beta > b.lo && g(beta) > 0.0) beta -= 1e-13;
  return beta;
}

}  // namespace

double weak_residual(double alpha, double beta) {
  return residual_with(alpha, beta, std::sqrt(2.0 / num::kPi), (1.0 - alpha) / (1.0 - beta));
}

double weak_alpha_of_beta(double beta) {
  check_fraction(beta, "beta");
  return solve_alpha([beta](double a) { return weak_residual(a, beta); }, beta);
}

double weak_beta_of_alpha(double alpha) { return invert(weak_alpha_of_beta, alpha); }

double weak_nonneg_residual(double alpha, double beta) {
  return residual_with(alpha, beta, std::sqrt(1.0 / (2.0 * num::kPi)), 2.0 * (1.0 - alpha) / (1.0 - beta) - 1.0);
}

double weak_nonneg_alpha_of_beta(double beta) {
  check_fraction(beta, "beta");
  return solve_alpha([beta](double a) { return weak_nonneg_residual(a, beta); }, beta);
}

double weak_nonneg_beta_of_alpha(double alpha) { return invert(weak_nonneg_alpha_of_beta, alpha); }

}  // namespace l1lab
