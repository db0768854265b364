#pragma once

// Dense symmetric eigensolver (cyclic Jacobi), Gram-based thin SVD and
// Perron vectors of nonnegative symmetric matrices.

#include <cstddef>
#include <vector>

#include "projconst/matrix.hpp"

namespace projconst {

inline constexpr double kEigTol = 1e-13;
inline constexpr int kMaxJacobiSweeps = 100;
inline constexpr double kRankTol = 1e-9;

struct SymEig {
  std::vector<double> values;  // nonincreasing
  Matrix vectors;              // column j pairs with values[j]
  int sweeps = 0;
};

/// Full spectrum of a symmetric matrix. `tol` is relative to ‖A‖_F and is
/// used both for the symmetry check and for the off-diagonal stopping rule.
/// Ties keep the order in which the Jacobi sweeps left them.
SymEig sym_eig(const Matrix& a, double tol = kEigTol, int max_sweeps = kMaxJacobiSweeps);

struct ThinSVD {
  Matrix left;                   // k × r, orthonormal columns
  std::vector<double> singulars;  // r values, nonincreasing
  Matrix right;                  // l × r, orthonormal columns

  std::size_t rank() const noexcept { return singulars.size(); }
};

/// Thin SVD through the eigendecomposition of the smaller Gram matrix.
/// Singular values whose squares fall below rank_tol·σ_max² are dropped.
/// Each left singular vector is signed so its largest-magnitude entry is
/// positive (first such entry on ties).
ThinSVD thin_svd(const Matrix& x, double rank_tol = kRankTol);

Matrix reconstruct(const ThinSVD& svd);

std::size_t numerical_rank(const Matrix& x, double rank_tol = kRankTol);

struct PerronPair {
  double value = 0.0;
  std::vector<double> vector;  // unit norm, entrywise nonnegative
};

/// Largest eigenvalue of an entrywise-nonnegative symmetric matrix with a
/// nonnegative unit eigenvector.
PerronPair perron_vector(const Matrix& a, double tol = kEigTol);

}  // namespace projconst
