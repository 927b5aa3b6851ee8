#pragma once

#include <vector>

namespace l1lab {

enum class RowSense { le, ge, eq };

// minimize objective . x subject to rows and x >= 0.
struct LinearProgram {
  int num_vars = 0;
  std::vector<double> objective;
  struct Row {
    std::vector<double> coeffs;  // dense, size num_vars
    RowSense sense = RowSense::le;
    double rhs = 0.0;
  };
  std::vector<Row> rows;

  void add_row(std::vector<double> coeffs, RowSense sense, double rhs);
};

enum class LpStatus { optimal, infeasible, unbounded, iteration_limit };

struct LpResult {
  LpStatus status = LpStatus::iteration_limit;
  double value = 0.0;
  std::vector<double> x;
  int pivots = 0;
};

// Dense two-phase tableau simplex with Bland's rule. Meant for the small exact
// programs of the null-space oracles and for cross-checking basis pursuit.
LpResult solve_lp(const LinearProgram& lp, int max_pivots = 100000);

}  // namespace l1lab
