#include "projconst/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "projconst/error.hpp"
#include "projconst/kernels.hpp"

namespace projconst {
namespace {

double off_diagonal_norm(const Matrix& a) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i + 1; j < a.cols(); ++j) sum += a(i, j) * a(i, j);
  return std::sqrt(2.0 * sum);
}

// Zeroes w(p,q) with the rotation that diagonalizes the (p,q) block. Rows p
// and q go through the SIMD rotation kernel; the matching columns are then
// mirrored from the rows, which is exact for a symmetric iterate.
void jacobi_rotate(Matrix& w, Matrix& vt, std::size_t p, std::size_t q) {
  const double apq = w(p, q);
  const double app = w(p, p);
  const double aqq = w(q, q);
  const double theta = (aqq - app) / (2.0 * apq);
  double t;
  if (std::fabs(theta) > 1e150) {
    t = 0.5 / theta;
  } else {
    t = std::copysign(1.0, theta) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
  }
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  simd::rot(w.row(p), w.row(q), c, s);
  w(p, p) = app - t * apq;
  w(q, q) = aqq + t * apq;
  w(p, q) = 0.0;
  w(q, p) = 0.0;
  const std::size_t n = w.rows();
  for (std::size_t k = 0; k < n; ++k) {
    if (k == p || k == q) continue;
    w(k, p) = w(p, k);
    w(k, q) = w(q, k);
  }
  simd::rot(vt.row(p), vt.row(q), c, s);
}

}  // namespace

SymEig sym_eig(const Matrix& a, double tol, int max_sweeps) {
  if (!a.square()) throw Error(Errc::DimMismatch, "sym_eig needs a square matrix");
  const std::size_t n = a.rows();
  SymEig out;
  const double norm = frobenius_norm(a);
  if (n == 0) return out;
  if (norm == 0.0) {
    out.values.assign(n, 0.0);
    out.vectors = Matrix::identity(n);
    return out;
  }
  if (max_asymmetry(a) > tol * norm) {
    throw Error(Errc::NotSymmetric, "asymmetry exceeds " + std::to_string(tol) + "·‖A‖_F");
  }

  Matrix w = a;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double mean = 0.5 * (w(i, j) + w(j, i));
      w(i, j) = mean;
      w(j, i) = mean;
    }
  Matrix vt = Matrix::identity(n);

  const double threshold = tol * norm;
  bool converged = false;
  int sweep = 0;
  for (; sweep <= max_sweeps; ++sweep) {
    if (off_diagonal_norm(w) <= threshold) {
      converged = true;
      break;
    }
    if (sweep == max_sweeps) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = w(p, q);
        if (apq == 0.0) continue;
        const double g = 100.0 * std::fabs(apq);
        if (sweep > 3 && std::fabs(w(p, p)) + g == std::fabs(w(p, p)) &&
            std::fabs(w(q, q)) + g == std::fabs(w(q, q))) {
          w(p, q) = 0.0;
          w(q, p) = 0.0;
          continue;
        }
        jacobi_rotate(w, vt, p, q);
      }
    }
  }
  if (!converged) {
    throw Error(Errc::NoConvergence,
                "Jacobi sweep limit " + std::to_string(max_sweeps) + " reached");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return w(i, i) > w(j, j); });
  out.values.resize(n);
  out.vectors = Matrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    out.values[j] = w(order[j], order[j]);
    const auto v = vt.row(order[j]);
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, j) = v[i];
  }
  out.sweeps = sweep;
  return out;
}

ThinSVD thin_svd(const Matrix& x, double rank_tol) {
  if (x.empty() || max_abs(x) == 0.0) throw Error(Errc::DegenerateInput, "zero matrix");
  const bool left_gram = x.rows() <= x.cols();
  const Matrix gram = left_gram ? gram_of_rows(x) : gram_of_columns(x);
  const SymEig eig = sym_eig(gram);

  const double top = eig.values.front();
  std::size_t r = 0;
  while (r < eig.values.size() && eig.values[r] > rank_tol * top) ++r;

  ThinSVD svd;
  svd.singulars.resize(r);
  Matrix known(gram.rows(), r);
  for (std::size_t j = 0; j < r; ++j) {
    svd.singulars[j] = std::sqrt(eig.values[j]);
    for (std::size_t i = 0; i < gram.rows(); ++i) known(i, j) = eig.vectors(i, j);
  }
  // The other factor: X v / σ (or Xᵀ u / σ).
  Matrix other = left_gram ? x.transpose() * known : x * known;
  for (std::size_t i = 0; i < other.rows(); ++i)
    for (std::size_t j = 0; j < r; ++j) other(i, j) /= svd.singulars[j];

  svd.left = left_gram ? std::move(known) : std::move(other);
  svd.right = left_gram ? std::move(other) : std::move(known);

  for (std::size_t j = 0; j < r; ++j) {
    std::size_t arg = 0;
    for (std::size_t i = 1; i < svd.left.rows(); ++i)
      if (std::fabs(svd.left(i, j)) > std::fabs(svd.left(arg, j))) arg = i;
    if (svd.left(arg, j) < 0.0) {
      for (std::size_t i = 0; i < svd.left.rows(); ++i) svd.left(i, j) = -svd.left(i, j);
      for (std::size_t i = 0; i < svd.right.rows(); ++i) svd.right(i, j) = -svd.right(i, j);
    }
  }
  return svd;
}

Matrix reconstruct(const ThinSVD& svd) {
  Matrix scaled = svd.left;
  for (std::size_t i = 0; i < scaled.rows(); ++i)
    for (std::size_t j = 0; j < scaled.cols(); ++j) scaled(i, j) *= svd.singulars[j];
  return scaled * svd.right.transpose();
}

std::size_t numerical_rank(const Matrix& x, double rank_tol) {
  if (x.empty() || max_abs(x) == 0.0) return 0;
  return thin_svd(x, rank_tol).rank();
}

PerronPair perron_vector(const Matrix& a, double tol) {
  for (double v : a.values())
    if (v < 0.0) throw Error(Errc::BadArgs, "perron_vector needs a nonnegative matrix");
  const SymEig eig = sym_eig(a, tol);
  PerronPair out;
  out.value = eig.values.front();
  out.vector = eig.vectors.column(0);
  // For a nonnegative symmetric matrix the top eigenvalue is the spectral
  // radius ρ, and |v| is again a ρ-eigenvector whenever v is.
  for (double& v : out.vector) v = std::fabs(v);
  const double nrm = norm2(out.vector);
  for (double& v : out.vector) v /= nrm;
  return out;
}

}  // namespace projconst
