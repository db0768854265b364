#include <set>

#include "doctest.h"
#include "projconst/error.hpp"
#include "projconst/gf2.hpp"

using namespace projconst;
using namespace projconst::gf2;

namespace {

// Direct evaluation of the defining sums, coordinate by coordinate.
int q_ref(const BinVec& x) {
  int s = 0;
  for (unsigned r = 1; 2 * r <= x.length(); ++r) s += x.at(2 * r - 1) * x.at(2 * r);
  return s % 2;
}
int b_ref(const BinVec& x, const BinVec& y) {
  int s = 0;
  for (unsigned r = 1; 2 * r <= x.length(); ++r) s += x.at(2 * r - 1) * y.at(2 * r) + x.at(2 * r) * y.at(2 * r - 1);
  return s % 2;
}

}  // namespace

TEST_CASE("quadratic_form examples") {
  CHECK(quadratic_form(BinVec::from_bits({0, 0, 0, 0})) == 0);
  CHECK(quadratic_form(BinVec::from_bits({1, 1, 0, 0})) == 1);
  CHECK(quadratic_form(BinVec::from_bits({1, 1, 1, 1})) == 0);
  CHECK(quadratic_form(BinVec::from_bits({0, 0, 1, 1})) == 1);
  CHECK(quadratic_form(BinVec::from_bits({1, 0, 0, 1})) == 0);
  CHECK_THROWS_AS(quadratic_form(BinVec::from_bits({1, 1, 0})), Error);
}

TEST_CASE("symplectic_form examples") {
  const BinVec zero = BinVec::from_bits({0, 0, 0, 0});
  CHECK(symplectic_form(BinVec::from_bits({1, 0, 0, 0}), BinVec::from_bits({0, 1, 0, 0})) == 1);
  for (std::uint64_t w = 0; w < 16; ++w) {
    const BinVec x(w, 4);
    CHECK(symplectic_form(x, zero) == 0);
    CHECK(symplectic_form(x, x) == 0);
  }
  try {
    symplectic_form(BinVec(1, 4), BinVec(1, 6));
    FAIL("expected LengthMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::LengthMismatch);
  }
  try {
    symplectic_form(BinVec(1, 3), BinVec(1, 3));
    FAIL("expected OddLength");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::OddLength);
  }
}

TEST_CASE("bit tricks agree with the defining sums on all of F_2^6") {
  for (std::uint64_t a = 0; a < 64; ++a) {
    const BinVec x(a, 6);
    CHECK(quadratic_form(x) == q_ref(x));
    for (std::uint64_t b = 0; b < 64; ++b) {
      const BinVec y(b, 6);
      REQUIRE(symplectic_form(x, y) == b_ref(x, y));
      CHECK(symplectic_form(x, y) == symplectic_form(y, x));
    }
  }
}

TEST_CASE("B is the polarization of Q") {
  // Q(x+y) = Q(x) + Q(y) + B(x,y) over F_2
  for (std::uint64_t a = 0; a < 64; ++a)
    for (std::uint64_t b = 0; b < 64; ++b) {
      const BinVec x(a, 6), y(b, 6), z(a ^ b, 6);
      REQUIRE(quadratic_form(z) == (quadratic_form(x) + quadratic_form(y) + symplectic_form(x, y)) % 2);
    }
}

TEST_CASE("quadric index set sizes, s = 2..5") {
  for (int s = 2; s <= 5; ++s) {
    CAPTURE(s);
    const auto sets = quadric_index_sets(s);
    const std::size_t p = 1u << (s - 1), q = 1u << s;
    CHECK(sets.rows.size() == p * (q - 1));
    CHECK(sets.cols.size() == p * (q + 1));
    std::set<std::uint64_t> all;
    for (const auto& x : sets.rows) {
      CHECK(quadratic_form(x) == 1);
      all.insert(x.word());
    }
    for (const auto& x : sets.cols) {
      CHECK(quadratic_form(x) == 0);
      all.insert(x.word());
    }
    CHECK(all.size() == (std::size_t{1} << (2 * s)));
    for (std::size_t i = 1; i < sets.rows.size(); ++i) CHECK(sets.rows[i - 1].word() < sets.rows[i].word());
  }
}

TEST_CASE("quadric_index_sets argument errors") {
  try {
    quadric_index_sets(1);
    FAIL("expected BadArgs");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::BadArgs);
  }
  try {
    quadric_index_sets(8);
    FAIL("expected STooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::STooLarge);
  }
  CHECK_THROWS_AS(build_sign_matrix(3, 2), Error);
}

TEST_CASE("build_sign_matrix: shapes, first column, definition") {
  for (int s = 2; s <= 3; ++s) {
    const SignMatrix x = build_sign_matrix(s);
    const auto p = family_parameters(s);
    CHECK(x.rows() == static_cast<std::size_t>(p.k));
    CHECK(x.cols() == static_cast<std::size_t>(p.l));
    CHECK(x.col_index[0].word() == 0);
    for (std::size_t i = 0; i < x.rows(); ++i) {
      CHECK(x(i, 0) == 1);
      for (std::size_t j = 0; j < x.cols(); ++j)
        REQUIRE(x(i, j) == (symplectic_form(x.row_index[i], x.col_index[j]) ? -1 : 1));
    }
  }
  CHECK(family_parameters(2).m == 5);
  CHECK(family_parameters(3).m == 21);
  CHECK(family_parameters(4).m == 85);
}

TEST_CASE("SignMatrix rejects non-sign entries") {
  CHECK_THROWS_AS(SignMatrix(1, 2, {1, 0}), Error);
  CHECK_THROWS_AS(SignMatrix::from_matrix(Matrix{{1, 0.5}}), Error);
  const SignMatrix x = SignMatrix::from_matrix(Matrix{{1, -1}, {-1, -1}});
  CHECK(x.to_matrix() == Matrix{{1, -1}, {-1, -1}});
}

TEST_CASE("reference 6x10 matrix is signed-permutation equivalent to s=2") {
  const SignMatrix a = reference_sign_matrix_6x10();
  const SignMatrix b = build_sign_matrix(2);
  const auto p = find_signed_permutation(a, b);
  REQUIRE(p.has_value());
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 10; ++j)
      CHECK(b(i, j) == p->row_signs[i] * p->col_signs[j] * a(p->row_perm[i], p->col_perm[j]));
  // a matrix that is not equivalent: flip one entry
  Matrix bad = a.to_matrix();
  bad(0, 0) = -bad(0, 0);
  CHECK_FALSE(find_signed_permutation(SignMatrix::from_matrix(bad), b).has_value());
}
