#pragma once

#include <Eigen/Dense>
#include <vector>

namespace l1lab {

inline constexpr int kSectionalMaxN = 24;
inline constexpr int kSectionalMaxK = 8;
inline constexpr int kStrongMaxN = 18;
inline constexpr int kStrongMaxK = 4;

// Orthonormal basis (n x (n - m)) of {w : A w = 0}, from a QR factorization of A^T.
// Throws RankDeficient if A lacks full row rank.
Eigen::MatrixXd null_space_basis(const Eigen::MatrixXd& A);

// True iff every nonzero w in null(A) has ||w_S||_1 < ||w_{S^c}||_1.
// Decided by one LP per sign pattern on S: max b.w_S - ||w_{S^c}||_1 over
// null-space w with ||w||_inf <= 1; holds iff every optimum is <= 1e-9.
// Throws DimensionError beyond n <= 24, k <= 8.
bool sectional_nullspace_holds(const Eigen::MatrixXd& A, const std::vector<int>& support);

// Nonnegative variant for a fixed support: true iff no nonzero w in null(A)
// has w_{S^c} >= 0 and sum(w) <= 0.
bool nonneg_nullspace_holds(const Eigen::MatrixXd& A, const std::vector<int>& support);

// Sectional (or nonnegative) condition over all C(n, k) supports.
// Throws DimensionError beyond n <= 18, k <= 4.
bool strong_nullspace_holds(const Eigen::MatrixXd& A, int k, bool nonneg);

}  // namespace l1lab
