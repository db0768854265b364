#pragma once

// Frames of unit vectors, their tightness/equiangularity/unbiasedness checks,
// and the ±1-matrix characterization of mutually unbiased ETF pairs.

#include <array>
#include <cstddef>
#include <optional>

#include "projconst/bounds.hpp"
#include "projconst/matrix.hpp"

namespace projconst {

inline constexpr double kFrameTol = 1e-9;

/// m × n matrix whose columns are unit vectors, n ≥ m.
class Frame {
 public:
  explicit Frame(Matrix vectors, double unit_tol = kFrameTol);

  std::size_t dim() const noexcept { return vectors_.rows(); }
  std::size_t count() const noexcept { return vectors_.cols(); }
  const Matrix& vectors() const noexcept { return vectors_; }
  Matrix gram() const { return gram_of_columns(vectors_); }

 private:
  Matrix vectors_;
};

struct TightCheck {
  bool tight = false;
  double residual = 0.0;  // ‖VVᵀ − (n/m)I‖_F
  double tol = 0.0;
};

struct EquiangularCheck {
  bool equiangular = false;
  double c = 0.0;  // mean off-diagonal |⟨v_i, v_j⟩|
  double max_deviation = 0.0;
  double tol = 0.0;
};

struct FrameReport {
  TightCheck tight;
  EquiangularCheck equiangular;
  double coherence_expected = 0.0;  // √((n−m)/(m(n−1)))
};

TightCheck check_tight(const Frame& f, double tol = kFrameTol);
EquiangularCheck check_equiangular(const Frame& f, double tol = kFrameTol);
FrameReport frame_report(const Frame& f, double tol = kFrameTol);

struct UnbiasedCheck {
  bool unbiased = false;
  bool preconditions_met = false;  // both frames tight and equiangular
  double c = 0.0;                  // mean |⟨v_i, w_j⟩|
  double max_deviation = 0.0;
  double expected = 0.0;  // 1/√m, forced by tightness
  double tol = 0.0;
};

/// Throws DimMismatch when the frames live in different dimensions.
UnbiasedCheck check_mutually_unbiased(const Frame& v, const Frame& w, double tol = kFrameTol);

struct PropertyCheck {
  bool pass = false;
  double residual = 0.0;
};

struct PropertyReport {
  std::size_t k = 0, l = 0;
  PropertyCheck p1;  // entries ±1; residual = max ||x| − 1|
  PropertyCheck p2;  // XXᵀX = aX; residual ‖XXᵀX − aX‖_F
  PropertyCheck p3;  // equiangular rows; residual = max deviation of off-diagonal |XXᵀ|
  PropertyCheck p4;  // equiangular columns; same for |XᵀX|
  PropertyCheck p5;  // rank = m; residual = |rank − m|
  double a_value = 0.0;
  double row_gram_offdiag = 0.0;  // mean off-diagonal |XXᵀ|
  double col_gram_offdiag = 0.0;  // mean off-diagonal |XᵀX|
  std::size_t rank = 0;
  std::optional<long long> m;  // claimed, or kl/a when that is an integer
  bool m_claimed = false;
  std::optional<std::array<bounds::IntegralityEntry, 3>> integrality;
  double tol = 0.0;

  bool all_pass() const noexcept {
    return p1.pass && p2.pass && p3.pass && p4.pass && p5.pass;
  }
  bool integral() const noexcept;
};

/// Report-style check of the five ±1-matrix properties. Without `claimed_m`
/// the dimension is inferred as kl/a.
PropertyReport verify_properties(const Matrix& x, double tol = kFrameTol,
                                 std::optional<long long> claimed_m = std::nullopt);

struct MubPair {
  Frame v;  // m × k
  Frame w;  // m × l
  long long m = 0;
  double a = 0.0;
  double spectrum_deviation = 0.0;  // max |σ_i − √a|
  double recovery_residual = 0.0;   // max |√m VᵀW − X|
  double row_gram_residual = 0.0;   // max |XXᵀ − l VᵀV|
  double col_gram_residual = 0.0;   // max |XᵀX − k WᵀW|
  FrameReport v_report;
  FrameReport w_report;
  UnbiasedCheck unbiased;
  PropertyReport properties;
};

/// Recovers the frame pair V = √(k/m) Pᵀ, W = √(l/m) Qᵀ from X = P Σ Qᵀ.
/// Throws PropertyFailure when X fails a property or the recovered pair fails
/// a frame check, NotUniformSpectrum when Σ ≠ √a·I within tol.
MubPair frames_from_sign_matrix(const Matrix& x, double tol = kFrameTol);

}  // namespace projconst
