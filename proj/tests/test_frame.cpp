#include <cmath>

#include "doctest.h"
#include "projconst/bounds.hpp"
#include "projconst/error.hpp"
#include "projconst/frame.hpp"
#include "projconst/gf2.hpp"
#include "support.hpp"

using namespace projconst;
using doctest::Approx;

TEST_CASE("Frame validation") {
  CHECK_THROWS_AS(Frame(Matrix{{1, 0}, {0, 2}}), Error);  // non-unit column
  CHECK_THROWS_AS(Frame(Matrix{{1}, {0}}), Error);         // n < m
  const Frame f(Matrix::identity(3));
  CHECK(f.dim() == 3);
  CHECK(f.count() == 3);
}

TEST_CASE("check_tight examples") {
  const TightCheck basis = check_tight(Frame(Matrix::identity(4)));
  CHECK(basis.tight);
  CHECK(basis.residual == 0.0);
  const TightCheck mb = check_tight(Frame(testsupport::mercedes_benz()));
  CHECK(mb.tight);
  CHECK(mb.residual <= 1e-15);
  const TightCheck skew = check_tight(Frame(Matrix{{1, 1 / std::sqrt(2.0), 0}, {0, 1 / std::sqrt(2.0), 1}}));
  CHECK_FALSE(skew.tight);
}

TEST_CASE("check_equiangular examples") {
  const EquiangularCheck basis = check_equiangular(Frame(Matrix::identity(4)));
  CHECK(basis.equiangular);
  CHECK(basis.c == 0.0);
  const EquiangularCheck mb = check_equiangular(Frame(testsupport::mercedes_benz()));
  CHECK(mb.equiangular);
  CHECK(mb.c == Approx(0.5));
  const FrameReport r = frame_report(Frame(testsupport::mercedes_benz()));
  CHECK(r.coherence_expected == Approx(bounds::phi(2, 3)));
}

TEST_CASE("check_mutually_unbiased examples") {
  const Frame e(Matrix::identity(4));
  const Frame h(testsupport::hadamard4());
  const UnbiasedCheck eh = check_mutually_unbiased(e, h);
  CHECK(eh.unbiased);
  CHECK(eh.c == Approx(0.5));
  const UnbiasedCheck ee = check_mutually_unbiased(e, e);
  CHECK_FALSE(ee.unbiased);
  try {
    check_mutually_unbiased(e, Frame(testsupport::mercedes_benz()));
    FAIL("expected DimMismatch");
  } catch (const Error& err) {
    CHECK(err.code() == Errc::DimMismatch);
  }
}

TEST_CASE("verify_properties on the reference 6x10 matrix") {
  const PropertyReport r = verify_properties(gf2::reference_sign_matrix_6x10().to_matrix());
  CHECK(r.all_pass());
  CHECK(r.a_value == Approx(12));
  CHECK(r.rank == 5);
  REQUIRE(r.m.has_value());
  CHECK(*r.m == 5);
  CHECK_FALSE(r.m_claimed);
  REQUIRE(r.integrality.has_value());
  CHECK((*r.integrality)[0].value == Approx(12));
  CHECK((*r.integrality)[1].value == Approx(2));
  CHECK((*r.integrality)[2].value == Approx(2));
  CHECK(r.integral());
}

TEST_CASE("verify_properties failure paths") {
  const PropertyReport ones = verify_properties(Matrix{{1, 1}, {1, 1}}, kFrameTol, 2);
  CHECK_FALSE(ones.p5.pass);
  CHECK(ones.rank == 1);

  Matrix x = gf2::reference_sign_matrix_6x10().to_matrix();
  x(2, 3) = 0;
  const PropertyReport z = verify_properties(x);
  CHECK_FALSE(z.p1.pass);
  CHECK_FALSE(z.all_pass());

  Matrix y = gf2::reference_sign_matrix_6x10().to_matrix();
  y(0, 0) = -y(0, 0);
  CHECK_FALSE(verify_properties(y).all_pass());
  CHECK_THROWS_AS(frames_from_sign_matrix(y), Error);
}

TEST_CASE("build_sign_matrix passes all properties, s = 2..4") {
  for (int s = 2; s <= 4; ++s) {
    CAPTURE(s);
    const auto p = gf2::family_parameters(s);
    const PropertyReport r = verify_properties(gf2::build_sign_matrix(s).to_matrix());
    CHECK(r.all_pass());
    CHECK(r.a_value == Approx(double(p.k * p.l) / p.m));
    CHECK(r.rank == static_cast<std::size_t>(p.m));
    CHECK(*r.m == p.m);
    CHECK(r.integral());
  }
}

TEST_CASE("frames_from_sign_matrix: round trip and Gram identities, s = 2..4") {
  for (int s = 2; s <= 4; ++s) {
    CAPTURE(s);
    const auto fp = gf2::family_parameters(s);
    const Matrix x = gf2::build_sign_matrix(s).to_matrix();
    const MubPair p = frames_from_sign_matrix(x);
    CHECK(p.m == fp.m);
    CHECK(p.v.dim() == static_cast<std::size_t>(fp.m));
    CHECK(p.v.count() == static_cast<std::size_t>(fp.k));
    CHECK(p.w.count() == static_cast<std::size_t>(fp.l));
    const double rm = std::sqrt(double(fp.m));
    CHECK(max_abs_diff(rm * (p.v.vectors().transpose() * p.w.vectors()), x) <= 1e-9);
    CHECK(max_abs_diff(gram_of_rows(x), double(fp.l) * p.v.gram()) <= 1e-9);
    CHECK(max_abs_diff(gram_of_columns(x), double(fp.k) * p.w.gram()) <= 1e-9);
    CHECK(p.v_report.tight.tight);
    CHECK(p.w_report.tight.tight);
    CHECK(std::fabs(p.v_report.equiangular.c - bounds::phi(fp.m, fp.k)) <= 1e-10);
    CHECK(std::fabs(p.w_report.equiangular.c - bounds::phi(fp.m, fp.l)) <= 1e-10);
    // the cross constant is forced to 1/sqrt(m)
    CHECK(p.unbiased.unbiased);
    CHECK(std::fabs(p.unbiased.c - 1 / rm) <= 1e-10);
    CHECK(p.unbiased.max_deviation <= 1e-10);
  }
}

TEST_CASE("frames_from_sign_matrix on the reference matrix and on a Hadamard matrix") {
  const MubPair p = frames_from_sign_matrix(gf2::reference_sign_matrix_6x10().to_matrix());
  CHECK(p.v.count() == 6);
  CHECK(p.w.count() == 10);
  CHECK(p.v_report.equiangular.c == Approx(0.2));
  CHECK(p.w_report.equiangular.c == Approx(1.0 / 3));
  CHECK(p.unbiased.c == Approx(1 / std::sqrt(5.0)));

  const MubPair h = frames_from_sign_matrix(2.0 * testsupport::hadamard4());
  CHECK(h.m == 4);
  CHECK(max_abs_diff(h.v.gram(), Matrix::identity(4)) <= 1e-12);
  CHECK(max_abs_diff(h.w.gram(), Matrix::identity(4)) <= 1e-12);
  CHECK(h.unbiased.c == Approx(0.5));
}
