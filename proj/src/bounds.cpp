#include "projconst/bounds.hpp"

#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>

#include "projconst/error.hpp"
#include "projconst/gf2.hpp"

namespace projconst::bounds {
namespace {

std::optional<std::uint64_t> exact_sqrt(unsigned __int128 v) {
  if (v > (static_cast<unsigned __int128>(1) << 104)) return std::nullopt;
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(v)));
  while (static_cast<unsigned __int128>(r) * r > v) --r;
  while (static_cast<unsigned __int128>(r + 1) * (r + 1) <= v) ++r;
  if (static_cast<unsigned __int128>(r) * r == v) return r;
  return std::nullopt;
}

void require(bool ok, const char* what) {
  if (!ok) throw Error(Errc::BadArgs, what);
}

}  // namespace

double phi(long long m, long long n) {
  require(m >= 1 && n >= m && n >= 2 && n < (1LL << 31), "phi needs n >= m >= 1 and n >= 2");
  if (n == m) return 0.0;
  // (n−m)/(m(n−1)) = p/q with a perfect-square numerator and denominator
  // gives an exact quotient.
  const long long den_full = m * (n - 1);
  const long long g = std::gcd(n - m, den_full);
  const auto num = static_cast<unsigned __int128>((n - m) / g);
  const auto den = static_cast<unsigned __int128>(den_full / g);
  if (auto a = exact_sqrt(num), b = exact_sqrt(den); a && b) {
    return static_cast<double>(*a) / static_cast<double>(*b);
  }
  return std::sqrt(static_cast<double>(n - m) / (static_cast<double>(m) * static_cast<double>(n - 1)));
}

double delta(long long m, long long n) {
  require(m >= 1 && n >= m, "delta needs n >= m >= 1");
  // √((n−1)(n−m)/m) = √((n−1)(n−m)m)/m; when the radicand is a square the
  // whole bound is the single rational (m + r)/n.
  const auto radicand = static_cast<unsigned __int128>(n - 1) *
                        static_cast<unsigned __int128>(n - m) * static_cast<unsigned __int128>(m);
  if (auto r = exact_sqrt(radicand)) {
    return (static_cast<double>(m) + static_cast<double>(*r)) / static_cast<double>(n);
  }
  const double md = static_cast<double>(m);
  const double nd = static_cast<double>(n);
  return md / nd * (1.0 + std::sqrt((nd - 1.0) * (nd - md) / md));
}

double gamma(long long m, long long k, long long l) {
  require(m >= 1 && k >= m && l >= m, "gamma needs k, l >= m >= 1");
  if (m == 1) throw Error(Errc::DegenerateDenominator, "gamma is undefined for m = 1");
  const double dk = delta(m, k);
  const double dl = delta(m, l);
  const double root = std::sqrt(static_cast<double>(m));
  // δk + δl grouped so that gamma(m,k,l) == gamma(m,l,k) bit for bit
  return (static_cast<double>(m) - dk * dl) / (2.0 * root - (dk + dl));
}

double cos_two_theta(long long m, long long k, long long l) {
  require(m >= 1 && k >= m && l >= m, "cos_two_theta needs k, l >= m >= 1");
  if (m == 1) throw Error(Errc::DegenerateDenominator, "cos(2θ) is undefined for m = 1");
  const double dk = delta(m, k);
  const double dl = delta(m, l);
  return (dk - dl) / (2.0 * std::sqrt(static_cast<double>(m)) - (dk + dl));
}

FamilyBound family_bound(int s) {
  require(s >= 2 && s <= 20, "family_bound needs 2 <= s <= 20");
  const auto p = gf2::family_parameters(s);
  const double two_s = std::ldexp(1.0, s);
  const double half = std::ldexp(1.0, s - 1);
  const double four_s = two_s * two_s;
  const double factor = (four_s - 1.0) / (two_s * four_s - 3.0 * half + 1.0);
  const double inner = (four_s / 2.0 + two_s - 1.0) / 3.0 + half * std::sqrt(static_cast<double>(p.m));
  return {p.m, p.k, p.l, factor * inner};
}

std::array<IntegralityEntry, 3> integrality(long long m, long long k, long long l) {
  require(m >= 1 && k >= m && l >= m && k >= 2 && l >= 2, "integrality needs k, l >= m, k, l >= 2");
  const double md = static_cast<double>(m);
  const double kd = static_cast<double>(k);
  const double ld = static_cast<double>(l);
  const std::array<double, 3> values{
      kd * ld / md,
      kd * phi(m, l),
      ld * phi(m, k),
  };
  std::array<IntegralityEntry, 3> out{};
  for (std::size_t i = 0; i < 3; ++i) {
    out[i] = {values[i], std::fabs(values[i] - std::round(values[i])) <= kIntegerTol};
  }
  return out;
}

BoundReport bound_report(long long m, long long k, long long l) {
  BoundReport r;
  r.m = m;
  r.k = k;
  r.l = l;
  r.phi_k = phi(m, k);
  r.phi_l = phi(m, l);
  r.delta_k = delta(m, k);
  r.delta_l = delta(m, l);
  r.delta_total = delta(m, k + l);
  r.gamma = gamma(m, k, l);
  r.cos_two_theta = cos_two_theta(m, k, l);
  r.kadec_snobar = std::sqrt(static_cast<double>(m));
  r.integrality = integrality(m, k, l);
  for (int s = 2; s <= 20; ++s) {
    const auto p = gf2::family_parameters(s);
    if (p.m > m) break;
    if (p.m == m && ((p.k == k && p.l == l) || (p.k == l && p.l == k))) {
      r.family_bound = family_bound(s).bound;
      r.family_s = s;
    }
  }
  return r;
}

EtfBoundReport etf_bound_report(long long m, long long n) {
  return {m, n, phi(m, n), delta(m, n), std::sqrt(static_cast<double>(m))};
}

}  // namespace projconst::bounds
