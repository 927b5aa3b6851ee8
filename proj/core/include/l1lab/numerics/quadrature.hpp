#pragma once

#include <functional>
#include <vector>

namespace l1lab::num {

struct QuadratureSpec {
  double half_width = 10.0;
  int panels = 64;
  double rel_tol = 1e-9;
  int max_panels = 1 << 14;

  // Throws DomainError when an invariant is broken.
  void validate() const;
};

// E g(h) for h ~ N(0,1), by composite 15-point Gauss-Legendre panels on
// [-half_width, half_width]. Panel edges are aligned to `breakpoints` that fall
// inside the window. Panels double until successive estimates agree to rel_tol.
double gauss_expectation(const std::function<double(double)>& g, const QuadratureSpec& spec = {},
                         const std::vector<double>& breakpoints = {});

// log E exp(log_g(h)) computed with an internal rescaling, so integrands such
// as exp(c*t(h)) with large exponents neither overflow nor underflow.
// Panels are centred on `center`, which should sit near the mode of
// exp(log_g(h) - h^2/2).
double log_gauss_expectation(const std::function<double(double)>& log_g,
                             const QuadratureSpec& spec = {},
                             const std::vector<double>& breakpoints = {}, double center = 0.0);

// log of the integral of exp(log_g(h)) * phi(h) over the finite interval [lo, hi].
double log_gauss_integral(const std::function<double(double)>& log_g, double lo, double hi,
                          const QuadratureSpec& spec = {}, const std::vector<double>& breakpoints = {});

}  // namespace l1lab::num
