#include "l1lab/empirical/basis_pursuit.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "l1lab/empirical/simplex.hpp"
#include "l1lab/error.hpp"

namespace l1lab {

namespace {

struct Certificate {
  bool ok = false;
  double gap = 0.0;
  Eigen::VectorXd x;
};

// Least squares on the support of z, then a dual point lambda obtained by
// correcting the ADMM multiplier so that A_S^T lambda matches the subgradient
// on S exactly. Optimal when A^T lambda is dual feasible off the support.
Certificate polish(const Eigen::MatrixXd& A, const Eigen::VectorXd& y, const Eigen::VectorXd& z,
                   const Eigen::VectorXd& lambda0, bool nonneg, double tol) {
  const int n = static_cast<int>(A.cols());
  const int m = static_cast<int>(A.rows());
  const double zmax = z.cwiseAbs().maxCoeff();
  std::vector<int> S;
  for (int j = 0; j < n; ++j)
    if (std::fabs(z(j)) > 1e-9 * std::max(zmax, 1.0)) S.push_back(j);
  Certificate c;
  if (static_cast<int>(S.size()) > m) return c;
  const int k = static_cast<int>(S.size());
  Eigen::MatrixXd As(m, k);
  Eigen::VectorXd sgn(k);
  for (int i = 0; i < k; ++i) {
    As.col(i) = A.col(S[i]);
    sgn(i) = z(S[i]) > 0 ? 1.0 : -1.0;
  }
  Eigen::VectorXd xs = Eigen::VectorXd::Zero(k);
  if (k > 0) {
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(As);
    if (qr.rank() < k) return c;
    xs = qr.solve(y);
  }
  const double ynorm = std::max(y.norm(), 1.0);
  if ((As * xs - y).norm() > tol * ynorm) return c;
  for (int i = 0; i < k; ++i)
    if (xs(i) * sgn(i) <= 0.0) return c;

  Eigen::VectorXd lambda = lambda0;
  if (k > 0) {
    const Eigen::VectorXd mismatch = sgn - As.transpose() * lambda0;
    lambda += As * (As.transpose() * As).ldlt().solve(mismatch);
  }
  const Eigen::VectorXd g = A.transpose() * lambda;
  double excess = 0.0;
  for (int j = 0; j < n; ++j) {
    if (std::find(S.begin(), S.end(), j) != S.end()) continue;
    excess = std::max(excess, nonneg ? g(j) - 1.0 : std::fabs(g(j)) - 1.0);
  }
  // Scale lambda into the dual feasible set and report the gap.
  const double scale = 1.0 / (1.0 + std::max(excess, 0.0));
  c.x = Eigen::VectorXd::Zero(n);
  for (int i = 0; i < k; ++i) c.x(S[i]) = xs(i);
  const double primal = c.x.lpNorm<1>();
  c.gap = primal - scale * y.dot(lambda);
  c.ok = excess <= 1e-9 && c.gap <= tol * std::max(primal, 1.0);
  return c;
}

}  // namespace

RecoveryReport solve_basis_pursuit(const ProblemInstance& inst, bool nonneg, const BasisPursuitOptions& o) {
  const Eigen::MatrixXd& A = inst.A;
  const Eigen::VectorXd& y = inst.y;
  const int n = static_cast<int>(A.cols());
  const int m = static_cast<int>(A.rows());
  if (y.size() != m || inst.x_true.size() != n) throw Error(ErrorCode::DimensionError, "instance sizes disagree");

  RecoveryReport rep;
  auto finish = [&](const Eigen::VectorXd& x) {
    rep.x_hat = x;
    rep.objective = x.lpNorm<1>();
    rep.residual = (A * x - y).norm() / std::max(y.norm(), 1.0);
    const double tn = inst.x_true.norm();
    rep.rel_error = tn > 0 ? (x - inst.x_true).norm() / tn : x.norm();
    rep.recovered = rep.rel_error <= o.recovery_tol;
    return rep;
  };

  if (y.norm() == 0.0) {
    rep.certified = true;
    return finish(Eigen::VectorXd::Zero(n));
  }

  const Eigen::MatrixXd AAt = A * A.transpose();
  Eigen::LLT<Eigen::MatrixXd> llt(AAt);
  // Exactly dependent rows leave an L diagonal of order sqrt(eps), not zero.
  if (llt.info() != Eigen::Success || llt.matrixL().toDenseMatrix().diagonal().minCoeff() <=
                                          1e-6 * std::sqrt(AAt.diagonal().maxCoeff())) {
    throw Error(ErrorCode::RankDeficient, "A does not have full row rank");
  }
  // x-update: projection of v onto {A x = y} is P v + q.
  const Eigen::MatrixXd P = Eigen::MatrixXd::Identity(n, n) - A.transpose() * llt.solve(A);
  const Eigen::VectorXd q = A.transpose() * llt.solve(y);

  double rho = o.rho;
  Eigen::VectorXd z = q, u = Eigen::VectorXd::Zero(n), x(n), z_old(n);
  const double scale_tol = o.tol * std::sqrt(static_cast<double>(n));
  for (int it = 1; it <= o.max_iterations; ++it) {
    x.noalias() = P * (z - u);
    x += q;
    z_old = z;
    const Eigen::VectorXd v = x + u;
    const double thr = 1.0 / rho;
    if (nonneg) {
      z = (v.array() - thr).max(0.0).matrix();
    } else {
      z = (v.array().abs() - thr).max(0.0) * v.array().sign();
    }
    u += x - z;
    const double r_norm = (x - z).norm();
    const double s_norm = rho * (z - z_old).norm();

    if (it % o.polish_every == 0 || (r_norm <= scale_tol && s_norm <= scale_tol)) {
      const Eigen::VectorXd lambda0 = llt.solve(A * (rho * u));
      Certificate c = polish(A, y, z, lambda0, nonneg, o.tol);
      if (c.ok) {
        rep.solver_iterations = it;
        rep.duality_gap = c.gap;
        rep.certified = true;
        return finish(c.x);
      }
    }
    // Residual balancing.
    if (it % 10 == 0) {
      if (r_norm > 10.0 * s_norm) {
        rho *= 2.0;
        u /= 2.0;
      } else if (s_norm > 10.0 * r_norm) {
        rho /= 2.0;
        u *= 2.0;
      }
    }
  }
  throw Error(ErrorCode::SolverStalled,
              "basis pursuit did not certify optimality within " + std::to_string(o.max_iterations) + " iterations");
}

double basis_pursuit_lp_objective(const Eigen::MatrixXd& A, const Eigen::VectorXd& y, bool nonneg) {
  const int n = static_cast<int>(A.cols());
  const int m = static_cast<int>(A.rows());
  const int vars = nonneg ? n : 2 * n;
  LinearProgram lp;
  lp.num_vars = vars;
  lp.objective.assign(vars, 1.0);
  for (int i = 0; i < m; ++i) {
    std::vector<double> row(vars, 0.0);
    for (int j = 0; j < n; ++j) {
      row[j] = A(i, j);
      if (!nonneg) row[n + j] = -A(i, j);
    }
    lp.add_row(std::move(row), RowSense::eq, y(i));
  }
  const LpResult r = solve_lp(lp);
  if (r.status != LpStatus::optimal) throw Error(ErrorCode::SolverStalled, "basis pursuit LP did not reach optimality");
  return r.value;
}

}  // namespace l1lab
