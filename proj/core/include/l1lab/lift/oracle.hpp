#pragma once

#include <functional>
#include <vector>

#include "l1lab/lift/types.hpp"
#include "l1lab/numerics/quadrature.hpp"

namespace l1lab {

// One (weight / c3) * log E exp(c3 * t(h)) contribution of a set term.
struct ExpTerm {
  double weight = 1.0;
  std::function<double(double)> t;
  std::vector<double> breakpoints;
  // Abscissae where exp(c3 t(h) - h^2/2) peaks; used to size the window.
  std::vector<double> modes{0.0};
};

// A set term of the form linear + sum_j weight_j / c3 * log E exp(c3 t_j(h)).
// `growth` is the coefficient p of h^2 in c3 * t(h) for large |h|; the
// expectation exists only for p < 1/2.
struct SetTermIntegrand {
  double linear = 0.0;
  double growth = 0.0;
  std::vector<ExpTerm> terms;
};

// Quadrature evaluation of a set term. Throws ConstraintViolated when
// growth >= 1/2, NonConvergent when quadrature cannot meet its tolerance.
double exp_set_term_oracle(const SetTermIntegrand& integrand, const LiftParams& params,
                           const num::QuadratureSpec& base = {});

// log E exp(c3 t(h)) restricted to lo <= h <= hi, by quadrature. Used to audit
// individual closed-form pieces.
double log_exp_moment_oracle(const std::function<double(double)>& t, double c3, double growth, double lo,
                             double hi, const std::vector<double>& breakpoints = {},
                             const std::vector<double>& modes = {0.0}, const num::QuadratureSpec& base = {});

}  // namespace l1lab
