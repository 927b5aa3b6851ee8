#include "l1lab/lift/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "l1lab/error.hpp"

namespace l1lab {

namespace {

// Window wide enough that the Gaussian-times-exponential tail beyond it is
// below exp(-40) relative to the peak. Modes outside [a, b] are clamped to it:
// a one-sided piece peaks at its endpoint.
num::QuadratureSpec window_for(double growth, const std::vector<double>& modes, double a, double b,
                               num::QuadratureSpec spec, double& center) {
  double lo = std::clamp(0.0, a, b), hi = lo;
  for (double m : modes) {
    lo = std::min(lo, std::clamp(m, a, b));
    hi = std::max(hi, std::clamp(m, a, b));
  }
  const double reach = std::sqrt(80.0 / (1.0 - 2.0 * growth));
  center = 0.5 * (lo + hi);
  spec.half_width = std::max(spec.half_width, 0.5 * (hi - lo) + reach);
  return spec;
}

}  // namespace

double log_exp_moment_oracle(const std::function<double(double)>& t, double c3, double growth, double lo,
                             double hi, const std::vector<double>& breakpoints, const std::vector<double>& modes,
                             const num::QuadratureSpec& base) {
  if (!(growth < 0.5)) throw Error(ErrorCode::ConstraintViolated, "exponential moment needs c3/(4 gamma) < 1/2");
  if (!(lo < hi)) return -std::numeric_limits<double>::infinity();
  double center = 0.0;
  const num::QuadratureSpec spec = window_for(growth, modes, lo, hi, base, center);
  const double a = std::max(lo, center - spec.half_width);
  const double b = std::min(hi, center + spec.half_width);
  if (!(a < b)) return -std::numeric_limits<double>::infinity();
  return num::log_gauss_integral([&](double h) { return c3 * t(h); }, a, b, spec, breakpoints);
}

double exp_set_term_oracle(const SetTermIntegrand& integrand, const LiftParams& params,
                           const num::QuadratureSpec& base) {
  if (!(integrand.growth < 0.5)) {
    throw Error(ErrorCode::ConstraintViolated, "set term needs c3/(4 gamma) < 1/2");
  }
  if (!(params.c3 > 0.0)) throw Error(ErrorCode::DomainError, "exp_set_term_oracle needs c3 > 0");
  constexpr double inf = std::numeric_limits<double>::infinity();
  double value = integrand.linear;
  for (const ExpTerm& term : integrand.terms) {
    const double log_moment = log_exp_moment_oracle(term.t, params.c3, integrand.growth, -inf, inf,
                                                    term.breakpoints, term.modes, base);
    value += term.weight / params.c3 * log_moment;
  }
  return value;
}

}  // namespace l1lab
