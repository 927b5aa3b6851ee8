#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

namespace l1lab {

// y = A x_true with A (m x n) i.i.d. standard normal and x_true k-sparse.
struct ProblemInstance {
  Eigen::MatrixXd A;
  Eigen::VectorXd x_true;
  Eigen::VectorXd y;
  std::vector<int> support;
  std::vector<int> signs;
  std::uint64_t seed = 0;
  bool nonneg = false;
};

// splitmix64 step; used to derive independent per-task seeds from a base seed.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) noexcept;

Eigen::MatrixXd gaussian_matrix(int rows, int cols, std::uint64_t seed);

// Deterministic in `seed`. Support is uniform, magnitudes are |N(0,1)| + 0.5,
// signs are uniform +-1 unless nonneg. Throws DimensionError unless 0 <= k <= m < n.
ProblemInstance generate_instance(int n, int m, int k, bool nonneg, std::uint64_t seed);

// Places a fresh k-sparse vector on an existing matrix.
ProblemInstance place_instance(const Eigen::MatrixXd& A, int k, bool nonneg, std::uint64_t seed);

}  // namespace l1lab
