#pragma once

// Feasible points (t, U) of the projection-constant program
//   maximize Σ_ij t_i t_j |UᵀU|_ij  subject to ‖t‖₂ = 1, UUᵀ = I_m,
// the explicit point built from a mutually unbiased ETF pair, and residual
// checks of the stationarity identities it satisfies.

#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "projconst/frame.hpp"
#include "projconst/matrix.hpp"
#include "projconst/rng.hpp"

namespace projconst {

inline constexpr double kFeasibilityTol = 1e-10;
inline constexpr double kSignTol = 1e-12;
inline constexpr double kStationaryTol = 1e-9;

struct Witness {
  std::vector<double> t;
  Matrix u;  // m × n, orthonormal rows
  double objective = 0.0;
  double theta = std::numeric_limits<double>::quiet_NaN();  // set when built from a frame pair

  std::size_t dim() const noexcept { return u.rows(); }
  std::size_t count() const noexcept { return u.cols(); }
};

/// ‖UUᵀ − I‖_F.
double feasibility_residual(const Matrix& u);

/// Σ_ij t_i t_j |UᵀU|_ij without any feasibility check.
double objective_value(std::span<const double> t, const Matrix& u);

/// Throws NotFeasible when |‖t‖₂ − 1| or ‖UUᵀ − I‖_F exceeds tol.
double objective(std::span<const double> t, const Matrix& u, double tol = kFeasibilityTol);

/// t = [cosθ/√k 𝟙_k ; sinθ/√l 𝟙_l], U = [cosθ √(m/k) V | sinθ √(m/l) W] at
/// the optimal angle. Throws NotUnbiasedPair unless (V, W) pass
/// check_mutually_unbiased at `tol`.
Witness build_witness(const Frame& v, const Frame& w, double tol = kFrameTol);

/// sgn(G) with sgn(0) = +1; throws AmbiguousSign when some |G_ij| < sign_tol.
Matrix sign_pattern(const Matrix& gram, double sign_tol = kSignTol);

/// T sgn(UᵀU) T with T = diag(t).
Matrix weighted_sign_matrix(std::span<const double> t, const Matrix& u, double sign_tol = kSignTol);

struct ResidualCheck {
  double residual = 0.0;
  double tol = 0.0;
  bool pass = false;
};

/// ‖ |UᵀU| t − γ t ‖₂.
ResidualCheck check_t_eigen(const Witness& w, double gamma, double tol = kStationaryTol);

/// ‖ T sgn(UᵀU) T Uᵀ − (γ/m) Uᵀ ‖_F.
ResidualCheck check_u_eigen(const Witness& w, double gamma, double tol = kStationaryTol,
                        double sign_tol = kSignTol);

/// max_i |(Uᵀ D U)_ii − λ t_i²| with D = U M Uᵀ, M = T sgn(UᵀU) T. When the
/// rows of U are leading eigenvectors of M, D is the diagonal of the m
/// leading eigenvalues.
ResidualCheck check_diagonal_identity(std::span<const double> t, const Matrix& u, double lambda,
                            double tol = kStationaryTol, double sign_tol = kSignTol);

struct DeltaAttainment {
  bool attained = false;
  double diagonal_residual = 0.0;  // max |(UᵀU)_ii − m/n|
  double offdiag_residual = 0.0;   // max ||UᵀU|_ij − √((n−m)m/(n−1))/n|
  double objective_uniform = 0.0;  // objective at t = 𝟙/√n
  double delta = 0.0;
  double tol = 0.0;
};

/// Equality conditions for the δ_{m,n} upper bound. Throws NotFeasible.
DeltaAttainment check_delta_attainment(const Matrix& u, double tol = kFrameTol);

struct SpectralReport {
  double t_eigen_residual = 0.0;
  double u_eigen_residual = 0.0;
  double diagonal_identity_residual = 0.0;
  double subspace_residual = 0.0;  // ‖M Uᵀ − Uᵀ (U M Uᵀ)‖_F: rows of U span an M-invariant subspace
  double mu_sum = 0.0;             // μ_1 + … + μ_m of M
  double gamma_claimed = 0.0;
  double leading_eigenvalue = 0.0;  // top eigenvalue of |UᵀU|
  bool ambiguous_sign = false;
  double tol = 0.0;

  bool stationary() const noexcept {
    return !ambiguous_sign && t_eigen_residual <= tol && u_eigen_residual <= tol && diagonal_identity_residual <= tol;
  }
};

/// Runs every residual check on (t, U) with γ = gamma. AmbiguousSign is
/// reported through the flag (sign-dependent residuals become NaN).
SpectralReport spectral_report(const Witness& w, double gamma, double tol = kStationaryTol,
                               double sign_tol = kSignTol);

/// m × n matrix with orthonormal rows: a standard Gaussian draw whose rows
/// are orthonormalized by two passes of modified Gram–Schmidt.
Matrix random_feasible(std::size_t m, std::size_t n, SplitMix64& rng);

/// Unit vector on the sphere from a Gaussian draw.
std::vector<double> random_unit_vector(std::size_t n, SplitMix64& rng);

}  // namespace projconst
