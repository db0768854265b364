#pragma once

// Random-restart maximization of Σ_ij t_i t_j |UᵀU|_ij over unit t and
// row-orthonormal U.
//
// Each restart runs two phases of the same minorize–maximize scheme:
//   1. continuation: |x| is replaced by √(x² + ε²) with ε decreasing
//      geometrically, so the t-step sees a strictly positive matrix and no
//      coordinate of t gets stuck at zero;
//   2. polish: the exact alternation between
//        t ← leading eigenvector of |UᵀU|,
//        U ← top-m eigenvectors (as rows) of T sgn(UᵀU) T,
//      until the objective changes by less than conv_tol.
// For fixed ε every half-step maximizes a minorant that touches the objective
// at the current point, so each phase is an ascent method.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "projconst/matrix.hpp"
#include "projconst/witness.hpp"

namespace projconst {

struct OptimizerConfig {
  std::size_t m = 0;
  std::size_t n = 0;
  std::size_t restarts = 1;
  std::size_t max_iters = 5000;
  double conv_tol = 1e-12;
  std::uint64_t seed = 0;
  std::optional<Witness> warm_start;  // replaces restart 0's random start; skips continuation

  std::size_t anneal_stages = 40;  // 0 disables the continuation phase
  std::size_t anneal_steps = 10;   // alternations per ε value
  double anneal_start = 1.0;
  double anneal_end = 1e-8;

  double sign_tol = kSignTol;
  std::size_t threads = 0;  // 0: hardware concurrency

  /// Throws BadArgs on an invalid configuration.
  void validate() const;
};

struct RefineT {
  std::vector<double> t;
  double value = 0.0;
};

/// t = Perron vector of |UᵀU|; value = its eigenvalue = objective(t, U).
RefineT refine_t(const Matrix& u);

struct RefineU {
  Matrix u;
  double mu_sum = 0.0;  // μ_1 + … + μ_m of T sgn(U_prevᵀU_prev) T
  bool ambiguous_sign = false;  // some Gram entry was within sign_tol of 0 and taken as +1
  bool eigen_tie = false;       // μ_m and μ_{m+1} coincide; the row space is not unique
};

/// Rows of U = top-m eigenvectors of T sgn(U_prevᵀU_prev) T.
RefineU refine_u(std::span<const double> t, const Matrix& u_prev, double sign_tol = kSignTol);

/// Continuation half-steps with |x| ≈ √(x² + ε²).
RefineT refine_t_smoothed(const Matrix& u, double eps);
RefineU refine_u_smoothed(std::span<const double> t, const Matrix& u_prev, double eps);

struct RestartOutcome {
  std::optional<double> value;  // empty when the restart failed
  std::size_t iterations = 0;   // polish iterations
  bool converged = false;
  std::size_t non_monotone_steps = 0;
  std::size_t ambiguous_sign_events = 0;
  std::size_t tie_events = 0;
};

struct OptResult {
  std::size_t m = 0, n = 0;
  Witness best;
  double value = 0.0;
  std::size_t best_restart = 0;
  std::size_t iterations_used = 0;  // polish iterations of the best restart
  std::size_t restarts_converged = 0;
  std::vector<std::optional<double>> value_histogram;  // per restart, in restart order
  std::vector<RestartOutcome> restarts;
  std::vector<double> best_trace;  // objective after each polish iteration of the best restart
};

/// Restarts may run concurrently; the argmax is reduced in restart order, so
/// the result does not depend on the thread count.
OptResult maximize(const OptimizerConfig& cfg);

inline constexpr double kCertifyTol = 1e-6;

/// Stationarity residuals of the best witness with γ = result.value.
SpectralReport certify(const OptResult& result, double tol = kCertifyTol);

}  // namespace projconst
