#include "projconst/gf2.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "projconst/error.hpp"

namespace projconst::gf2 {
namespace {

constexpr std::uint64_t kLowPairBits = 0x5555555555555555ULL;

void require_even(const BinVec& x) {
  if (x.length() % 2 != 0) throw Error(Errc::OddLength, "binary vector has odd length");
}

void require_family_s(int s, int max_s) {
  if (s < 2) throw Error(Errc::BadArgs, "s must be at least 2");
  if (s > max_s || 2 * s > 62) {
    throw Error(Errc::STooLarge, "s = " + std::to_string(s) + " exceeds limit " +
                                     std::to_string(std::min(max_s, 31)));
  }
}

}  // namespace

BinVec::BinVec(std::uint64_t word, unsigned length) : word_(word), length_(length) {
  if (length > 64) throw Error(Errc::BadArgs, "binary vectors are limited to 64 coordinates");
  if (length < 64 && (word >> length) != 0)
    throw Error(Errc::BadArgs, "word has bits beyond the vector length");
}

BinVec BinVec::from_bits(const std::vector<int>& bits) {
  if (bits.size() > 64) throw Error(Errc::BadArgs, "binary vectors are limited to 64 coordinates");
  std::uint64_t word = 0;
  for (int b : bits) {
    if (b != 0 && b != 1) throw Error(Errc::BadArgs, "bits must be 0 or 1");
    word = (word << 1) | static_cast<std::uint64_t>(b);
  }
  return BinVec(word, static_cast<unsigned>(bits.size()));
}

int BinVec::at(unsigned i) const {
  if (i < 1 || i > length_) throw Error(Errc::BadArgs, "coordinate out of range");
  return static_cast<int>((word_ >> (length_ - i)) & 1U);
}

int quadratic_form(const BinVec& x) {
  require_even(x);
  // With even length, x_{2r-1} sits one bit above x_{2r}, and x_{2r} occupies
  // an even bit position.
  const std::uint64_t w = x.word();
  return std::popcount((w >> 1) & w & kLowPairBits) & 1;
}

int symplectic_form(const BinVec& x, const BinVec& y) {
  if (x.length() != y.length()) throw Error(Errc::LengthMismatch, "binary vectors differ in length");
  require_even(x);
  const std::uint64_t a = x.word();
  const std::uint64_t b = y.word();
  const std::uint64_t terms = (((a >> 1) & b) ^ ((b >> 1) & a)) & kLowPairBits;
  return std::popcount(terms) & 1;
}

QuadricIndexSets quadric_index_sets(int s, int max_s) {
  require_family_s(s, max_s);
  const unsigned length = 2U * static_cast<unsigned>(s);
  const std::uint64_t count = std::uint64_t{1} << length;
  QuadricIndexSets sets;
  const auto params = family_parameters(s);
  sets.rows.reserve(static_cast<std::size_t>(params.k));
  sets.cols.reserve(static_cast<std::size_t>(params.l));
  for (std::uint64_t w = 0; w < count; ++w) {
    const BinVec x(w, length);
    (quadratic_form(x) == 1 ? sets.rows : sets.cols).push_back(x);
  }
  return sets;
}

SignMatrix::SignMatrix(std::size_t rows, std::size_t cols, std::vector<std::int8_t> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) throw Error(Errc::DimMismatch, "entry count mismatch");
  for (auto e : entries_)
    if (e != 1 && e != -1) throw Error(Errc::PropertyFailure, "entries must be -1 or +1");
}

SignMatrix SignMatrix::from_matrix(const Matrix& m) {
  std::vector<std::int8_t> entries;
  entries.reserve(m.rows() * m.cols());
  for (double v : m.values()) {
    if (v != 1.0 && v != -1.0) throw Error(Errc::PropertyFailure, "entries must be -1 or +1");
    entries.push_back(static_cast<std::int8_t>(v));
  }
  return SignMatrix(m.rows(), m.cols(), std::move(entries));
}

Matrix SignMatrix::to_matrix() const {
  Matrix out(rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) out.values()[i] = entries_[i];
  return out;
}

FamilyParameters family_parameters(int s) {
  if (s < 2 || s > 31) throw Error(Errc::BadArgs, "s must lie in [2, 31]");
  const long long p = 1LL << (s - 1);
  const long long q = 1LL << s;
  return {(q * q - 1) / 3, p * (q - 1), p * (q + 1)};
}

SignMatrix build_sign_matrix(int s, int max_s) {
  QuadricIndexSets sets = quadric_index_sets(s, max_s);
  const std::size_t k = sets.rows.size();
  const std::size_t l = sets.cols.size();
  std::vector<std::int8_t> entries(k * l);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < l; ++j)
      entries[i * l + j] = symplectic_form(sets.rows[i], sets.cols[j]) == 0 ? 1 : -1;
  SignMatrix x(k, l, std::move(entries));
  x.row_index = std::move(sets.rows);
  x.col_index = std::move(sets.cols);
  return x;
}

SignMatrix reference_sign_matrix_6x10() {
  // clang-format off
  static const std::vector<std::int8_t> entries{
       1,  1,  1,  1,  1,  1,  1,  1,  1,  1,
       1,  1, -1,  1, -1, -1,  1, -1, -1, -1,
       1, -1,  1, -1,  1, -1, -1,  1, -1, -1,
      -1,  1,  1, -1, -1,  1, -1, -1,  1, -1,
      -1, -1, -1,  1,  1,  1, -1, -1, -1,  1,
      -1, -1, -1, -1, -1, -1,  1,  1,  1,  1,
  };
  // clang-format on
  return SignMatrix(6, 10, entries);
}

std::optional<SignedPermutation> find_signed_permutation(const SignMatrix& a,
                                                         const SignMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return std::nullopt;
  const std::size_t k = a.rows();
  const std::size_t l = a.cols();
  if (k > 8) throw Error(Errc::BadArgs, "signed permutation search is limited to 8 rows");

  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> column(k);
  do {
    // Row signs modulo a global flip, which column signs absorb.
    for (std::uint32_t mask = 0; mask < (1U << k); mask += 2) {
      std::vector<bool> used(l, false);
      SignedPermutation found{perm, std::vector<int>(k), std::vector<std::size_t>(l),
                              std::vector<int>(l)};
      for (std::size_t i = 0; i < k; ++i) found.row_signs[i] = (mask >> i) & 1U ? -1 : 1;
      bool ok = true;
      for (std::size_t j = 0; j < l && ok; ++j) {
        for (std::size_t i = 0; i < k; ++i) column[i] = found.row_signs[i] * a(perm[i], j);
        ok = false;
        for (std::size_t d = 0; d < l; ++d) {
          if (used[d]) continue;
          for (int sign : {1, -1}) {
            bool match = true;
            for (std::size_t i = 0; i < k && match; ++i) match = sign * column[i] == b(i, d);
            if (match) {
              used[d] = true;
              found.col_perm[d] = j;
              found.col_signs[d] = sign;
              ok = true;
              break;
            }
          }
          if (ok) break;
        }
      }
      if (ok) return found;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

}  // namespace projconst::gf2
