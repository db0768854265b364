#pragma once

// Closed-form projection-constant quantities for n-vector ETFs and for
// mutually unbiased ETF pairs.

#include <array>
#include <optional>

namespace projconst::bounds {

inline constexpr double kIntegerTol = 1e-9;

/// Common |⟨v_i, v_j⟩| of an n-vector ETF in R^m: √((n−m)/(m(n−1))).
double phi(long long m, long long n);

/// Upper bound on λ(m, n): (m/n)(1 + √((n−1)(n−m)/m)); attained iff an
/// n-vector ETF for R^m exists.
double delta(long long m, long long n);

/// Lower bound on λ(m, k+l) from a mutually unbiased k-/l-vector ETF pair:
/// (m − δ_{m,k}δ_{m,l}) / (2√m − δ_{m,k} − δ_{m,l}).
double gamma(long long m, long long k, long long l);

/// cos(2θ) of the optimal mixing angle; lies in [−1, 1].
double cos_two_theta(long long m, long long k, long long l);

struct FamilyBound {
  long long m, k, l;
  double bound;
};

/// Closed-form lower bound on λ(m, 4^s) for the quadric family,
/// m = (4^s − 1)/3.
FamilyBound family_bound(int s);

struct IntegralityEntry {
  double value;
  bool is_integer;
};

/// kl/m, k√((l−m)/(m(l−1))), l√((k−m)/(m(k−1))).
std::array<IntegralityEntry, 3> integrality(long long m, long long k, long long l);

struct BoundReport {
  long long m = 0, k = 0, l = 0;
  double phi_k = 0.0, phi_l = 0.0;
  double delta_k = 0.0, delta_l = 0.0;
  double delta_total = 0.0;  // δ_{m,k+l}, the ceiling for λ(m, k+l)
  double gamma = 0.0;
  double cos_two_theta = 0.0;
  double kadec_snobar = 0.0;
  std::optional<double> family_bound;  // when (m, k, l) is a quadric-family triple
  std::optional<int> family_s;
  std::array<IntegralityEntry, 3> integrality{};
};

BoundReport bound_report(long long m, long long k, long long l);

/// Report for a single (m, n): δ and φ only.
struct EtfBoundReport {
  long long m = 0, n = 0;
  double phi = 0.0;
  double delta = 0.0;
  double kadec_snobar = 0.0;
};
EtfBoundReport etf_bound_report(long long m, long long n);

}  // namespace projconst::bounds
