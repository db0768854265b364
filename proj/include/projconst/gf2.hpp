#pragma once

// Binary quadratic/symplectic forms on F_2^{2s} and the ±1 character
// submatrix indexed by the two quadrics {Q = 1} and {Q = 0}.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "projconst/matrix.hpp"

namespace projconst::gf2 {

inline constexpr int kDefaultMaxS = 7;

/// Bit sequence (x_1, ..., x_n), n ≤ 64, packed so that x_1 is the most
/// significant of the n low bits. Canonical order is the order of `word()`.
class BinVec {
 public:
  BinVec() = default;
  BinVec(std::uint64_t word, unsigned length);
  static BinVec from_bits(const std::vector<int>& bits);

  unsigned length() const noexcept { return length_; }
  std::uint64_t word() const noexcept { return word_; }
  /// Coordinate x_i, 1-based.
  int at(unsigned i) const;

  friend bool operator==(const BinVec&, const BinVec&) = default;

 private:
  std::uint64_t word_ = 0;
  unsigned length_ = 0;
};

/// Q(x) = Σ_r x_{2r-1} x_{2r} mod 2.
int quadratic_form(const BinVec& x);
/// B(x, y) = Σ_r (x_{2r-1} y_{2r} + x_{2r} y_{2r-1}) mod 2.
int symplectic_form(const BinVec& x, const BinVec& y);

struct QuadricIndexSets {
  std::vector<BinVec> rows;  // Q(x) = 1, size 2^{s-1}(2^s - 1)
  std::vector<BinVec> cols;  // Q(x) = 0, size 2^{s-1}(2^s + 1)
};

QuadricIndexSets quadric_index_sets(int s, int max_s = kDefaultMaxS);

/// k × l matrix with entries in {-1, +1}.
class SignMatrix {
 public:
  SignMatrix() = default;
  SignMatrix(std::size_t rows, std::size_t cols, std::vector<std::int8_t> entries);
  /// Throws PropertyFailure if an entry is not exactly ±1.
  static SignMatrix from_matrix(const Matrix& m);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  int operator()(std::size_t i, std::size_t j) const noexcept { return entries_[i * cols_ + j]; }

  Matrix to_matrix() const;

  std::vector<BinVec> row_index;  // filled by build_sign_matrix
  std::vector<BinVec> col_index;

  friend bool operator==(const SignMatrix& a, const SignMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int8_t> entries_;
};

/// X[i][j] = (-1)^{B(rows[i], cols[j])}.
SignMatrix build_sign_matrix(int s, int max_s = kDefaultMaxS);

struct FamilyParameters {
  long long m, k, l;
};
FamilyParameters family_parameters(int s);

/// The 6 × 10 matrix with equiangular rows and columns whose row/column
/// systems are mutually unbiased in R^5.
SignMatrix reference_sign_matrix_6x10();

/// b(i, j) = row_signs[i] · col_signs[j] · a(row_perm[i], col_perm[j]).
struct SignedPermutation {
  std::vector<std::size_t> row_perm;
  std::vector<int> row_signs;
  std::vector<std::size_t> col_perm;
  std::vector<int> col_signs;
};

/// Searches for row/column permutations and sign flips taking `a` to `b`.
/// Exhaustive over row permutations, so limited to at most 8 rows.
std::optional<SignedPermutation> find_signed_permutation(const SignMatrix& a,
                                                         const SignMatrix& b);

}  // namespace projconst::gf2
