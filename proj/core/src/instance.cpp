#include "l1lab/empirical/instance.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "l1lab/error.hpp"

namespace l1lab {

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) noexcept {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Eigen::MatrixXd gaussian_matrix(int rows, int cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXd A(rows, cols);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) A(i, j) = normal(rng);
  return A;
}

ProblemInstance place_instance(const Eigen::MatrixXd& A, int k, bool nonneg, std::uint64_t seed) {
  const int n = static_cast<int>(A.cols());
  if (k < 0 || k > n) throw Error(ErrorCode::DimensionError, "sparsity k must lie in [0, n]");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  // Partial Fisher-Yates for a uniform k-subset.
  for (int i = 0; i < k; ++i) {
    std::uniform_int_distribution<int> pick(i, n - 1);
    std::swap(idx[i], idx[pick(rng)]);
  }
  ProblemInstance inst;
  inst.A = A;
  inst.nonneg = nonneg;
  inst.seed = seed;
  inst.support.assign(idx.begin(), idx.begin() + k);
  std::sort(inst.support.begin(), inst.support.end());
  inst.x_true = Eigen::VectorXd::Zero(n);
  std::bernoulli_distribution coin(0.5);
  for (int j : inst.support) {
    const int sign = nonneg ? 1 : (coin(rng) ? 1 : -1);
    inst.signs.push_back(sign);
    inst.x_true(j) = sign * (std::fabs(normal(rng)) + 0.5);
  }
  inst.y = inst.A * inst.x_true;
  return inst;
}

ProblemInstance generate_instance(int n, int m, int k, bool nonneg, std::uint64_t seed) {
  if (!(k >= 0 && k <= m && m < n)) {
    throw Error(ErrorCode::DimensionError, "need 0 <= k <= m < n, got n=" + std::to_string(n) +
                                               " m=" + std::to_string(m) + " k=" + std::to_string(k));
  }
  Eigen::MatrixXd A = gaussian_matrix(m, n, derive_seed(seed, 0));
  return place_instance(A, k, nonneg, derive_seed(seed, 1));
}

}  // namespace l1lab
