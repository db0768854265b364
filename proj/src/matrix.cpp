#include "projconst/matrix.hpp"

#include <algorithm>
#include <cmath>

#include "projconst/error.hpp"
#include "projconst/kernels.hpp"

namespace projconst {

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(Errc::DimMismatch, "ragged initializer list");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix eye(n, n);
  for (std::size_t i = 0; i < n; ++i) eye(i, i) = 1.0;
  return eye;
}

std::vector<double> Matrix::column(std::size_t j) const {
  std::vector<double> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

static void require_same_shape(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(Errc::DimMismatch, "matrix shapes differ");
}

Matrix& Matrix::operator+=(const Matrix& other) {
  require_same_shape(*this, other);
  simd::axpy(1.0, other.data_, data_);
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  require_same_shape(*this, other);
  simd::axpy(-1.0, other.data_, data_);
  return *this;
}

Matrix& Matrix::operator*=(double factor) {
  simd::scal(factor, data_);
  return *this;
}

Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
Matrix operator*(Matrix lhs, double factor) { return lhs *= factor; }
Matrix operator*(double factor, Matrix rhs) { return rhs *= factor; }

Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
  if (lhs.cols() != rhs.rows()) throw Error(Errc::DimMismatch, "inner dimensions differ");
  Matrix out(lhs.rows(), rhs.cols());
  for (std::size_t i = 0; i < lhs.rows(); ++i) {
    auto dst = out.row(i);
    for (std::size_t r = 0; r < lhs.cols(); ++r) {
      const double a = lhs(i, r);
      if (a != 0.0) simd::axpy(a, rhs.row(r), dst);
    }
  }
  return out;
}

Matrix gram_of_columns(const Matrix& a) {
  const std::size_t n = a.cols();
  Matrix g(n, n);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    const auto row = a.row(r);
    for (std::size_t i = 0; i < n; ++i) {
      if (row[i] != 0.0) simd::axpy(row[i], row, g.row(i));
    }
  }
  // Vector body and scalar tail may round differently; mirror the upper triangle.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) g(j, i) = g(i, j);
  return g;
}

Matrix gram_of_rows(const Matrix& a) {
  const std::size_t k = a.rows();
  Matrix g(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j) {
      const double v = simd::dot(a.row(i), a.row(j));
      g(i, j) = v;
      g(j, i) = v;
    }
  }
  return g;
}

std::vector<double> multiply(const Matrix& a, std::span<const double> x) {
  if (a.cols() != x.size()) throw Error(Errc::DimMismatch, "matrix-vector size mismatch");
  std::vector<double> y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) y[i] = simd::dot(a.row(i), x);
  return y;
}

Matrix entrywise_abs(const Matrix& a) {
  Matrix out = a;
  for (double& v : out.values()) v = std::fabs(v);
  return out;
}

Matrix diag_scale(std::span<const double> left, const Matrix& a, std::span<const double> right) {
  if (left.size() != a.rows() || right.size() != a.cols())
    throw Error(Errc::DimMismatch, "diagonal scaling size mismatch");
  Matrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) *= left[i] * right[j];
  return out;
}

double frobenius_norm(const Matrix& a) {
  const auto v = a.values();
  return std::sqrt(simd::dot(v, v));
}

double max_abs(const Matrix& a) {
  double m = 0.0;
  for (double v : a.values()) m = std::max(m, std::fabs(v));
  return m;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b);
  double m = 0.0;
  const auto va = a.values();
  const auto vb = b.values();
  for (std::size_t i = 0; i < va.size(); ++i) m = std::max(m, std::fabs(va[i] - vb[i]));
  return m;
}

double max_asymmetry(const Matrix& a) {
  if (!a.square()) throw Error(Errc::DimMismatch, "matrix is not square");
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i + 1; j < a.cols(); ++j) m = std::max(m, std::fabs(a(i, j) - a(j, i)));
  return m;
}

double norm2(std::span<const double> x) { return std::sqrt(simd::dot(x, x)); }

double dot(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw Error(Errc::LengthMismatch, "vector lengths differ");
  return simd::dot(x, y);
}

}  // namespace projconst
