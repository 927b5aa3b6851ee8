#pragma once

#include <cstdint>
#include <vector>

#include "l1lab/empirical/basis_pursuit.hpp"

namespace l1lab {

struct RecoveryRate {
  double rate = 0.0;
  int successes = 0;
  int trials = 0;
  // Trials whose solver raised an error; counted as failures.
  int solver_errors = 0;
  long long solver_iterations = 0;
};

// Fraction of `trials` random instances (m = round(alpha n), k = round(beta n))
// recovered by basis pursuit. Trial t uses derive_seed(seed, t); the result does
// not depend on `threads`. Throws DimensionError unless 1 <= k <= m < n.
RecoveryRate weak_recovery_stats(double alpha, double beta, int n, int trials, bool nonneg, std::uint64_t seed,
                                 int threads = 1, const BasisPursuitOptions& options = {});

double weak_recovery_rate(double alpha, double beta, int n, int trials, bool nonneg, std::uint64_t seed,
                          int threads = 1);

struct TransitionEstimate {
  double alpha = 0.0;
  // Final bracket [lo, hi] of the 50% crossing.
  double lo = 0.0;
  double hi = 0.0;
  std::vector<double> probe_alphas;
  std::vector<double> probe_rates;
};

// Bisection over alpha in (beta, alpha_max] for the 50% recovery crossing,
// stopping when the bracket half-width is <= tol. Probes share `seed`.
TransitionEstimate empirical_weak_transition(double beta, int n, int trials, bool nonneg, std::uint64_t seed,
                                             double tol = 0.01, int threads = 1, double alpha_max = 0.99);

}  // namespace l1lab
