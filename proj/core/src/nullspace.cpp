#include "l1lab/empirical/nullspace.hpp"

#include <algorithm>
#include <string>

#include "l1lab/empirical/simplex.hpp"
#include "l1lab/error.hpp"

namespace l1lab {

namespace {

constexpr double kSlack = 1e-9;

void check_support(const std::vector<int>& support, int n) {
  for (int j : support)
    if (j < 0 || j >= n) throw Error(ErrorCode::DimensionError, "support index out of range");
  std::vector<int> s = support;
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw Error(ErrorCode::DimensionError, "repeated support index");
}

// max over u of b . (Z u)_S - sum_{j not in S} |(Z u)_j| with |(Z u)_i| <= 1.
// Variables: u+ (d), u- (d), t (n - k); written as a minimization.
double sectional_lp(const Eigen::MatrixXd& Z, const std::vector<int>& support, const std::vector<double>& b) {
  const int n = static_cast<int>(Z.rows());
  const int d = static_cast<int>(Z.cols());
  std::vector<char> in_s(n, 0);
  for (int j : support) in_s[j] = 1;
  std::vector<int> comp;
  for (int j = 0; j < n; ++j)
    if (!in_s[j]) comp.push_back(j);
  const int nt = static_cast<int>(comp.size());

  LinearProgram lp;
  lp.num_vars = 2 * d + nt;
  lp.objective.assign(lp.num_vars, 0.0);
  for (std::size_t i = 0; i < support.size(); ++i) {
    for (int c = 0; c < d; ++c) {
      lp.objective[c] -= b[i] * Z(support[i], c);
      lp.objective[d + c] += b[i] * Z(support[i], c);
    }
  }
  for (int t = 0; t < nt; ++t) lp.objective[2 * d + t] = 1.0;

  auto w_row = [&](int j, double s) {
    std::vector<double> row(lp.num_vars, 0.0);
    for (int c = 0; c < d; ++c) {
      row[c] = s * Z(j, c);
      row[d + c] = -s * Z(j, c);
    }
    return row;
  };
  for (int t = 0; t < nt; ++t) {
    for (double s : {1.0, -1.0}) {
      auto row = w_row(comp[t], s);
      row[2 * d + t] = -1.0;
      lp.add_row(std::move(row), RowSense::le, 0.0);
    }
  }
  for (int j = 0; j < n; ++j)
    for (double s : {1.0, -1.0}) lp.add_row(w_row(j, s), RowSense::le, 1.0);

  const LpResult r = solve_lp(lp);
  if (r.status != LpStatus::optimal) throw Error(ErrorCode::SolverStalled, "null-space LP did not reach optimality");
  return -r.value;
}

// min over u of sum(Z u) subject to (Z u)_j >= 0 off the support and |Z u| <= 1.
double nonneg_lp(const Eigen::MatrixXd& Z, const std::vector<int>& support) {
  const int n = static_cast<int>(Z.rows());
  const int d = static_cast<int>(Z.cols());
  std::vector<char> in_s(n, 0);
  for (int j : support) in_s[j] = 1;
  LinearProgram lp;
  lp.num_vars = 2 * d;
  lp.objective.assign(lp.num_vars, 0.0);
  for (int c = 0; c < d; ++c) {
    const double col_sum = Z.col(c).sum();
    lp.objective[c] = col_sum;
    lp.objective[d + c] = -col_sum;
  }
  auto w_row = [&](int j, double s) {
    std::vector<double> row(lp.num_vars, 0.0);
    for (int c = 0; c < d; ++c) {
      row[c] = s * Z(j, c);
      row[d + c] = -s * Z(j, c);
    }
    return row;
  };
  for (int j = 0; j < n; ++j) {
    if (!in_s[j]) lp.add_row(w_row(j, -1.0), RowSense::le, 0.0);
    for (double s : {1.0, -1.0}) lp.add_row(w_row(j, s), RowSense::le, 1.0);
  }
  const LpResult r = solve_lp(lp);
  if (r.status != LpStatus::optimal) throw Error(ErrorCode::SolverStalled, "null-space LP did not reach optimality");
  return r.value;
}

bool sectional_with_basis(const Eigen::MatrixXd& Z, const std::vector<int>& support) {
  const int k = static_cast<int>(support.size());
  if (k == 0 || Z.cols() == 0) return true;
  // Patterns b and -b give the same optimum (w -> -w), so fix b_0 = +1.
  const unsigned patterns = 1u << (k - 1);
  std::vector<double> b(k);
  for (unsigned mask = 0; mask < patterns; ++mask) {
    b[0] = 1.0;
    for (int i = 1; i < k; ++i) b[i] = (mask >> (i - 1)) & 1u ? -1.0 : 1.0;
    if (sectional_lp(Z, support, b) > kSlack) return false;
  }
  return true;
}

bool nonneg_with_basis(const Eigen::MatrixXd& Z, const std::vector<int>& support) {
  if (Z.cols() == 0) return true;
  return nonneg_lp(Z, support) >= -kSlack;
}

}  // namespace

Eigen::MatrixXd null_space_basis(const Eigen::MatrixXd& A) {
  const int m = static_cast<int>(A.rows());
  const int n = static_cast<int>(A.cols());
  if (m > n) throw Error(ErrorCode::DimensionError, "null_space_basis expects m <= n");
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> rank_check(A);
  if (rank_check.rank() < m) throw Error(ErrorCode::RankDeficient, "A does not have full row rank");
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(A.transpose());
  const Eigen::MatrixXd Q = qr.householderQ() * Eigen::MatrixXd::Identity(n, n);
  return Q.rightCols(n - m);
}

bool sectional_nullspace_holds(const Eigen::MatrixXd& A, const std::vector<int>& support) {
  const int n = static_cast<int>(A.cols());
  if (n > kSectionalMaxN || static_cast<int>(support.size()) > kSectionalMaxK) {
    throw Error(ErrorCode::DimensionError, "sectional oracle is exhaustive only for n <= " +
                                               std::to_string(kSectionalMaxN) + ", k <= " +
                                               std::to_string(kSectionalMaxK));
  }
  check_support(support, n);
  if (support.empty()) return true;
  return sectional_with_basis(null_space_basis(A), support);
}

bool nonneg_nullspace_holds(const Eigen::MatrixXd& A, const std::vector<int>& support) {
  const int n = static_cast<int>(A.cols());
  if (n > kSectionalMaxN || static_cast<int>(support.size()) > kSectionalMaxK) {
    throw Error(ErrorCode::DimensionError, "nonnegative oracle is exhaustive only for n <= " +
                                               std::to_string(kSectionalMaxN) + ", k <= " +
                                               std::to_string(kSectionalMaxK));
  }
  check_support(support, n);
  return nonneg_with_basis(null_space_basis(A), support);
}

bool strong_nullspace_holds(const Eigen::MatrixXd& A, int k, bool nonneg) {
  const int n = static_cast<int>(A.cols());
  if (n > kStrongMaxN || k > kStrongMaxK || k < 0) {
    throw Error(ErrorCode::DimensionError, "strong oracle is exhaustive only for n <= " + std::to_string(kStrongMaxN) +
                                               ", 0 <= k <= " + std::to_string(kStrongMaxK));
  }
  if (k == 0) return true;
  const Eigen::MatrixXd Z = null_space_basis(A);
  // Enumerate k-subsets in lexicographic order.
  std::vector<int> s(k);
  for (int i = 0; i < k; ++i) s[i] = i;
  while (true) {
    if (!(nonneg ? nonneg_with_basis(Z, s) : sectional_with_basis(Z, s))) return false;
    int i = k - 1;
    while (i >= 0 && s[i] == n - k + i) --i;
    if (i < 0) return true;
    ++s[i];
    for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
  }
}

}  // namespace l1lab
