#pragma once

#include <Eigen/Dense>

#include "l1lab/empirical/instance.hpp"

namespace l1lab {

struct BasisPursuitOptions {
  // Relative feasibility tolerance and ADMM stopping tolerance.
  double tol = 1e-8;
  // recovered <=> ||x_hat - x_true|| / ||x_true|| <= recovery_tol.
  double recovery_tol = 1e-5;
  int max_iterations = 20000;
  // ADMM iterations between support-polish attempts.
  int polish_every = 25;
  double rho = 1.0;
};

struct RecoveryReport {
  bool recovered = false;
  double rel_error = 0.0;
  int solver_iterations = 0;
  // ||A x_hat - y|| / max(||y||, 1).
  double residual = 0.0;
  double objective = 0.0;
  // Primal minus dual objective for the dual point found; <= tol when certified.
  double duality_gap = 0.0;
  bool certified = false;
  Eigen::VectorXd x_hat;
};

// min ||x||_1 s.t. A x = y (and x >= 0 when nonneg), by ADMM with a cached
// projector onto {A x = y}, periodically polished by least squares on the
// current support and certified through a dual point.
// Throws RankDeficient if A lacks full row rank, SolverStalled at the iteration cap.
RecoveryReport solve_basis_pursuit(const ProblemInstance& inst, bool nonneg, const BasisPursuitOptions& options = {});

// Exact LP reformulation (x = u - v, u, v >= 0) solved by the dense simplex.
// Returns the optimal objective; intended for small n cross-checks.
double basis_pursuit_lp_objective(const Eigen::MatrixXd& A, const Eigen::VectorXd& y, bool nonneg);

}  // namespace l1lab
