#pragma once

#include <optional>
#include <vector>

#include "l1lab/lift/types.hpp"

namespace l1lab {

struct ThresholdOptions {
  double tol_beta = 1e-5;
  // A condition counts as satisfied only below -feasibility_margin.
  double feasibility_margin = 1e-9;
  double c3_min = 1e-4;
  double c3_max = 1e3;
  int c3_starts = 8;
  std::vector<double> nu_seeds{0.1, 0.5, 1.0, 2.0, 4.0};
  // Objective evaluations per local search.
  int local_evaluations = 4000;
  // Run the nested route (1-D search over c3 around inner minimizations)
  // whenever the joint search fails to certify feasibility.
  bool nested_route = true;
  // Feasibility probes below the final beta used to check monotonicity.
  int monotonicity_probes = 6;
  double beta_min = 1e-4;
  double beta_max = 0.9999;
  double strong_beta_max = 0.5;
};

// Evaluates the lifted master condition of a kind at one parameter point.
// Kinds: sectional, strong, strong_nonneg.
BoundEvaluation lifted_evaluation(ThresholdKind kind, double alpha, double beta, const LiftParams& params);

struct FeasibilityCheck {
  bool feasible = false;
  // Minimized condition value (lifted: total; direct: kind's margin).
  double margin = 0.0;
  LiftParams params;
};

// Minimizes the lifted total over (c3, gamma, nu1[, nu2]) by multistart
// Nelder-Mead; stops early once the total drops below -feasibility_margin.
FeasibilityCheck lifted_feasibility(ThresholdKind kind, double alpha, double beta, const ThresholdOptions& options = {},
                                    const std::vector<LiftParams>& warm_starts = {});

// Direct (c3 -> 0) condition: sectional and strong use min_nu sqrt(E) - sqrt(alpha),
// strong_nonneg uses min_nu E - alpha.
FeasibilityCheck direct_feasibility(ThresholdKind kind, double alpha, double beta,
                                    const ThresholdOptions& options = {});

// Largest beta (to tol_beta) at which the kind's condition holds for alpha.
// Weak kinds invert their characterization directly and ignore `method`.
// Throws DomainError for alpha outside (0, 1] or tol_beta < 1e-5 and
// NoFeasibleBeta when the condition fails already at beta_min.
ThresholdResult threshold_bisect(double alpha, ThresholdKind kind, BoundMethod method,
                                 const ThresholdOptions& options = {});

}  // namespace l1lab
