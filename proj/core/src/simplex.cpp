#include "l1lab/empirical/simplex.hpp"

#include <cmath>
#include <string>

#include "l1lab/error.hpp"

namespace l1lab {

void LinearProgram::add_row(std::vector<double> coeffs, RowSense sense, double rhs) {
  if (static_cast<int>(coeffs.size()) != num_vars) {
    throw Error(ErrorCode::DimensionError, "LP row has " + std::to_string(coeffs.size()) + " coefficients, expected " +
                                               std::to_string(num_vars));
  }
  rows.push_back({std::move(coeffs), sense, rhs});
}

namespace {

constexpr double kEps = 1e-10;

class Tableau {
 public:
  Tableau(int rows, int cols) : rows_(rows), cols_(cols), t_((rows + 1) * (cols + 1), 0.0), basis_(rows, -1) {}

  double& at(int r, int c) { return t_[r * (cols_ + 1) + c]; }
  double& rhs(int r) { return at(r, cols_); }
  // Row `rows_` holds reduced costs; its rhs holds -objective.
  double& cost(int c) { return at(rows_, c); }
  int& basis(int r) { return basis_[r]; }

  void pivot(int pr, int pc) {
    const double inv = 1.0 / at(pr, pc);
    for (int c = 0; c <= cols_; ++c) at(pr, c) *= inv;
    for (int r = 0; r <= rows_; ++r) {
      if (r == pr) continue;
      const double f = at(r, pc);
      if (f == 0.0) continue;
      for (int c = 0; c <= cols_; ++c) at(r, c) -= f * at(pr, c);
    }
    basis_[pr] = pc;
  }

  // Bland's rule over columns [0, active_cols). Returns false if unbounded.
  LpStatus optimize(int active_cols, int max_pivots, int& pivots) {
    while (true) {
      int pc = -1;
      for (int c = 0; c < active_cols; ++c) {
        if (cost(c) < -kEps) {
          pc = c;
          break;
        }
      }
      if (pc < 0) return LpStatus::optimal;
      int pr = -1;
      double best = 0.0;
      for (int r = 0; r < rows_; ++r) {
        if (at(r, pc) > kEps) {
          const double ratio = rhs(r) / at(r, pc);
          if (pr < 0 || ratio < best - 1e-12 || (std::fabs(ratio - best) <= 1e-12 && basis_[r] < basis_[pr])) {
            pr = r;
            best = ratio;
          }
        }
      }
      if (pr < 0) return LpStatus::unbounded;
      if (++pivots > max_pivots) return LpStatus::iteration_limit;
      pivot(pr, pc);
    }
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

 private:
  int rows_, cols_;
  std::vector<double> t_;
  std::vector<int> basis_;
};

}  // namespace

LpResult solve_lp(const LinearProgram& lp, int max_pivots) {
  const int n = lp.num_vars;
  const int m = static_cast<int>(lp.rows.size());
  if (static_cast<int>(lp.objective.size()) != n) throw Error(ErrorCode::DimensionError, "LP objective size mismatch");

  // Column layout: originals, one slack/surplus per inequality, artificials.
  int n_slack = 0, n_art = 0;
  std::vector<double> sign(m, 1.0);
  std::vector<RowSense> sense(m);
  for (int r = 0; r < m; ++r) {
    sense[r] = lp.rows[r].sense;
    if (lp.rows[r].rhs < 0) {
      sign[r] = -1.0;
      if (sense[r] == RowSense::le) sense[r] = RowSense::ge;
      else if (sense[r] == RowSense::ge) sense[r] = RowSense::le;
    }
    if (sense[r] != RowSense::eq) ++n_slack;
    if (sense[r] != RowSense::le) ++n_art;
  }
  const int cols = n + n_slack + n_art;
  Tableau t(m, cols);
  int slack = n, art = n + n_slack;
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < n; ++c) t.at(r, c) = sign[r] * lp.rows[r].coeffs[c];
    t.rhs(r) = sign[r] * lp.rows[r].rhs;
    if (sense[r] == RowSense::le) {
      t.at(r, slack) = 1.0;
      t.basis(r) = slack++;
    } else {
      if (sense[r] == RowSense::ge) t.at(r, slack++) = -1.0;
      t.at(r, art) = 1.0;
      t.basis(r) = art++;
    }
  }

  LpResult out;
  // Phase 1: minimize the sum of artificials.
  if (n_art > 0) {
    for (int r = 0; r < m; ++r) {
      if (t.basis(r) >= n + n_slack) {
        for (int c = 0; c <= cols; ++c) t.cost(c) -= t.at(r, c);
        t.cost(t.basis(r)) = 0.0;
      }
    }
    for (int c = n + n_slack; c < cols; ++c) t.cost(c) = 0.0;
    const LpStatus s = t.optimize(cols, max_pivots, out.pivots);
    if (s == LpStatus::iteration_limit) {
      out.status = s;
      return out;
    }
    if (-t.cost(cols) > 1e-8) {
      out.status = LpStatus::infeasible;
      return out;
    }
    // Drive remaining artificials out of the basis where possible.
    for (int r = 0; r < m; ++r) {
      if (t.basis(r) < n + n_slack) continue;
      for (int c = 0; c < n + n_slack; ++c) {
        if (std::fabs(t.at(r, c)) > 1e-9) {
          t.pivot(r, c);
          break;
        }
      }
    }
  }

  // Phase 2 costs restricted to non-artificial columns.
  for (int c = 0; c <= cols; ++c) t.cost(c) = 0.0;
  for (int c = 0; c < n; ++c) t.cost(c) = lp.objective[c];
  for (int r = 0; r < m; ++r) {
    const int b = t.basis(r);
    const double f = b < n ? lp.objective[b] : 0.0;
    if (f == 0.0) continue;
    for (int c = 0; c <= cols; ++c) t.cost(c) -= f * t.at(r, c);
  }
  out.status = t.optimize(n + n_slack, max_pivots, out.pivots);
  if (out.status != LpStatus::optimal) return out;
  out.x.assign(n, 0.0);
  for (int r = 0; r < m; ++r)
    if (t.basis(r) < n) out.x[t.basis(r)] = t.rhs(r);
  out.value = 0.0;
  for (int c = 0; c < n; ++c) out.value += lp.objective[c] * out.x[c];
  return out;
}

}  // namespace l1lab
