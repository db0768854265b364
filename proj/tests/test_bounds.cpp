#include <cmath>
#include <tuple>

#include "doctest.h"
#include "projconst/bounds.hpp"
#include "projconst/error.hpp"

using namespace projconst;
using namespace projconst::bounds;
using doctest::Approx;

TEST_CASE("phi examples") {
  CHECK(phi(5, 5) == 0.0);
  CHECK(phi(5, 6) == 0.2);
  CHECK(phi(5, 10) == Approx(1.0 / 3).epsilon(1e-15));
  CHECK_THROWS_AS(phi(5, 4), Error);
}

TEST_CASE("delta examples") {
  CHECK(delta(2, 3) == 4.0 / 3.0);
  CHECK(delta(3, 6) == Approx((1 + std::sqrt(5.0)) / 2).epsilon(1e-15));
  CHECK(delta(21, 126) == 13.0 / 3.0);
  CHECK(delta(7, 7) == 1.0);
  CHECK(delta(5, 10) == 2.0);
  CHECK(delta(5, 6) == Approx(5.0 / 3));
  CHECK_THROWS_AS(delta(3, 2), Error);
}

TEST_CASE("delta = (m/n)(1 + (n-1) phi)") {
  for (long long m = 1; m <= 30; ++m)
    for (long long n = std::max(m, 2LL); n <= 40; ++n)
      CHECK(delta(m, n) == Approx(double(m) / n * (1 + (n - 1) * phi(m, n))).epsilon(1e-14));
}

TEST_CASE("gamma examples") {
  CHECK(gamma(5, 6, 10) == Approx(5 * (11 + 6 * std::sqrt(5.0)) / 59).epsilon(1e-15));
  CHECK(gamma(4, 4, 4) == Approx(1.5).epsilon(1e-15));
  CHECK(gamma(6, 6, 16) == Approx(2.2741).epsilon(5e-5));
  CHECK(gamma(21, 28, 36) == Approx(3.9397).epsilon(3e-5));
  try {
    gamma(1, 2, 3);
    FAIL("expected DegenerateDenominator");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DegenerateDenominator);
  }
  CHECK_THROWS_AS(gamma(5, 4, 10), Error);
}

TEST_CASE("gamma is symmetric in k and l") {
  for (long long m = 2; m <= 12; ++m)
    for (long long k = m; k <= m + 10; ++k)
      for (long long l = m; l <= m + 10; ++l) CHECK(gamma(m, k, l) == gamma(m, l, k));
}

TEST_CASE("cos_two_theta examples and range") {
  CHECK(cos_two_theta(5, 10, 10) == 0.0);
  CHECK(cos_two_theta(5, 6, 10) == Approx(-1 / (6 * std::sqrt(5.0) - 11)).epsilon(1e-14));
  CHECK(cos_two_theta(6, 6, 16) == Approx((1 - 2.25) / (2 * std::sqrt(6.0) - 3.25)).epsilon(1e-14));
  for (long long m = 2; m <= 20; ++m)
    for (long long k = m; k <= 3 * m; ++k)
      for (long long l = m; l <= 3 * m; l += 3) {
        const double c = cos_two_theta(m, k, l);
        CHECK((c >= -1.0 && c <= 1.0));
      }
}

TEST_CASE("trig identity behind the optimal angle") {
  for (auto [m, k, l] : {std::tuple{5LL, 6LL, 10LL}, {21LL, 28LL, 36LL}, {6LL, 6LL, 16LL}, {4LL, 4LL, 4LL}, {3LL, 5LL, 9LL}}) {
    const double c2 = cos_two_theta(m, k, l);
    const double cc = (1 + c2) / 2, ss = (1 - c2) / 2;
    const double g = gamma(m, k, l), r = std::sqrt(double(m));
    CHECK(std::fabs(cc * delta(m, k) + ss * r - g) <= 1e-12);
    CHECK(std::fabs(cc * r + ss * delta(m, l) - g) <= 1e-12);
  }
}

TEST_CASE("family bound equals gamma at the quadric parameters, s = 2..6") {
  for (int s = 2; s <= 6; ++s) {
    const FamilyBound f = family_bound(s);
    CHECK(f.m == ((1LL << (2 * s)) - 1) / 3);
    CHECK(f.k == (1LL << (s - 1)) * ((1LL << s) - 1));
    CHECK(f.l == (1LL << (s - 1)) * ((1LL << s) + 1));
    CHECK(std::fabs(f.bound - gamma(f.m, f.k, f.l)) <= 1e-12);
  }
  CHECK(std::fabs(family_bound(2).bound - gamma(5, 6, 10)) <= 1e-14);
  CHECK_THROWS_AS(family_bound(1), Error);
}

TEST_CASE("integrality examples") {
  const auto a = integrality(5, 6, 10);
  CHECK(a[0].value == Approx(12));
  CHECK(a[1].value == Approx(2));
  CHECK(a[2].value == Approx(2));
  for (const auto& e : a) CHECK(e.is_integer);
  const auto b = integrality(21, 28, 36);
  CHECK(b[0].value == Approx(48));
  CHECK(b[1].value == Approx(4));  // 28·√(15/735)
  CHECK(b[2].value == Approx(4));  // 36·√(7/567)
  for (const auto& e : b) CHECK(e.is_integer);
  const auto c = integrality(3, 4, 5);
  CHECK(c[0].value == Approx(20.0 / 3));
  CHECK_FALSE(c[0].is_integer);
}

TEST_CASE("delta sits in [1, sqrt(m)) on the grid 2 <= m <= n <= 200") {
  for (long long m = 2; m <= 200; ++m)
    for (long long n = m; n <= 200; ++n) {
      const double d = delta(m, n);
      REQUIRE(d < std::sqrt(double(m)));
      REQUIRE(d >= 1.0);
      if (n == m) REQUIRE(d == 1.0);
      else REQUIRE(d > 1.0);
    }
}

TEST_CASE("bound_report fields") {
  const BoundReport r = bound_report(5, 6, 10);
  CHECK(r.phi_k == 0.2);
  CHECK(r.delta_l == 2.0);
  CHECK(r.delta_total == Approx(delta(5, 16)));
  CHECK(r.kadec_snobar == Approx(std::sqrt(5.0)));
  REQUIRE(r.family_s.has_value());
  CHECK(*r.family_s == 2);
  CHECK(r.gamma <= r.kadec_snobar);
  CHECK_FALSE(bound_report(4, 4, 4).family_bound.has_value());
  const EtfBoundReport e = etf_bound_report(2, 3);
  CHECK(e.delta == 4.0 / 3.0);
  CHECK(e.phi == Approx(0.5));
}
