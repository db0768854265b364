#include "projconst/frame.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <tuple>

#include "projconst/error.hpp"
#include "projconst/linalg.hpp"

namespace projconst {
namespace {

// Mean and max deviation of |g_ij| over the off-diagonal entries.
std::pair<double, double> offdiag_spread(const Matrix& g) {
  const std::size_t n = g.rows();
  if (n < 2) return {0.0, 0.0};
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) sum += std::fabs(g(i, j));
  const double mean = sum / static_cast<double>(n * (n - 1));
  double dev = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) dev = std::max(dev, std::fabs(std::fabs(g(i, j)) - mean));
  return {mean, dev};
}

}  // namespace

Frame::Frame(Matrix vectors, double unit_tol) : vectors_(std::move(vectors)) {
  if (vectors_.rows() == 0 || vectors_.cols() < vectors_.rows()) {
    throw Error(Errc::BadArgs, "a frame needs n >= m >= 1 vectors");
  }
  for (std::size_t j = 0; j < vectors_.cols(); ++j) {
    const auto col = vectors_.column(j);
    if (std::fabs(norm2(col) - 1.0) > unit_tol) {
      throw Error(Errc::BadArgs, "frame vector " + std::to_string(j) + " is not a unit vector");
    }
  }
}

TightCheck check_tight(const Frame& f, double tol) {
  Matrix frame_op = gram_of_rows(f.vectors());
  const double ratio = static_cast<double>(f.count()) / static_cast<double>(f.dim());
  for (std::size_t i = 0; i < f.dim(); ++i) frame_op(i, i) -= ratio;
  const double residual = frobenius_norm(frame_op);
  return {residual <= tol, residual, tol};
}

EquiangularCheck check_equiangular(const Frame& f, double tol) {
  const auto [mean, dev] = offdiag_spread(f.gram());
  return {dev <= tol, mean, dev, tol};
}

FrameReport frame_report(const Frame& f, double tol) {
  FrameReport r;
  r.tight = check_tight(f, tol);
  r.equiangular = check_equiangular(f, tol);
  const auto m = static_cast<long long>(f.dim());
  const auto n = static_cast<long long>(f.count());
  r.coherence_expected = n >= 2 ? bounds::phi(m, n) : 0.0;
  return r;
}

UnbiasedCheck check_mutually_unbiased(const Frame& v, const Frame& w, double tol) {
  if (v.dim() != w.dim()) throw Error(Errc::DimMismatch, "frames live in different dimensions");
  UnbiasedCheck r;
  r.tol = tol;
  r.expected = 1.0 / std::sqrt(static_cast<double>(v.dim()));
  r.preconditions_met = check_tight(v, tol).tight && check_equiangular(v, tol).equiangular &&
                        check_tight(w, tol).tight && check_equiangular(w, tol).equiangular;

  const Matrix cross = v.vectors().transpose() * w.vectors();
  double sum = 0.0;
  for (double x : cross.values()) sum += std::fabs(x);
  r.c = sum / static_cast<double>(cross.values().size());
  for (double x : cross.values()) r.max_deviation = std::max(r.max_deviation, std::fabs(std::fabs(x) - r.c));
  r.unbiased = r.preconditions_met && r.max_deviation <= tol && std::fabs(r.c - r.expected) <= tol;
  return r;
}

bool PropertyReport::integral() const noexcept {
  if (!integrality) return false;
  return std::all_of(integrality->begin(), integrality->end(),
                     [](const auto& e) { return e.is_integer; });
}

PropertyReport verify_properties(const Matrix& x, double tol, std::optional<long long> claimed_m) {
  if (x.empty()) throw Error(Errc::DegenerateInput, "empty sign matrix");
  PropertyReport r;
  r.k = x.rows();
  r.l = x.cols();
  r.tol = tol;

  for (double v : x.values()) r.p1.residual = std::max(r.p1.residual, std::fabs(std::fabs(v) - 1.0));
  r.p1.pass = std::all_of(x.values().begin(), x.values().end(),
                          [](double v) { return v == 1.0 || v == -1.0; });

  const Matrix xxt = gram_of_rows(x);
  const Matrix xtx = gram_of_columns(x);
  const Matrix cubic = xxt * x;
  const double norm_sq = dot(x.values(), x.values());
  const double norm_x = std::sqrt(norm_sq);
  r.a_value = norm_sq > 0.0 ? dot(cubic.values(), x.values()) / norm_sq : 0.0;
  r.p2.residual = frobenius_norm(cubic - r.a_value * x);
  r.p2.pass = r.p2.residual <= tol * norm_x * r.a_value;

  std::tie(r.row_gram_offdiag, r.p3.residual) = offdiag_spread(xxt);
  r.p3.pass = r.p3.residual <= tol;
  std::tie(r.col_gram_offdiag, r.p4.residual) = offdiag_spread(xtx);
  r.p4.pass = r.p4.residual <= tol;

  r.rank = numerical_rank(x);
  const double kl = static_cast<double>(r.k * r.l);
  if (claimed_m) {
    r.m = claimed_m;
    r.m_claimed = true;
  } else if (r.a_value > 0.0) {
    const double inferred = kl / r.a_value;
    if (std::fabs(inferred - std::round(inferred)) <= bounds::kIntegerTol) {
      r.m = static_cast<long long>(std::llround(inferred));
    }
  }
  if (r.m) {
    r.p5.residual = std::fabs(static_cast<double>(r.rank) - static_cast<double>(*r.m));
    r.p5.pass = r.p5.residual == 0.0;
    const auto k = static_cast<long long>(r.k);
    const auto l = static_cast<long long>(r.l);
    if (*r.m >= 1 && k >= *r.m && l >= *r.m && k >= 2 && l >= 2) {
      r.integrality = bounds::integrality(*r.m, k, l);
    }
  } else {
    r.p5.residual = std::nan("");
    r.p5.pass = false;
  }
  return r;
}

MubPair frames_from_sign_matrix(const Matrix& x, double tol) {
  PropertyReport props = verify_properties(x, tol);
  if (!props.all_pass()) throw Error(Errc::PropertyFailure, "sign matrix fails P1-P5");
  const long long m = *props.m;
  const double a = props.a_value;

  const ThinSVD svd = thin_svd(x);
  if (static_cast<long long>(svd.rank()) != m) {
    throw Error(Errc::PropertyFailure, "numerical rank differs from kl/a");
  }
  double spectrum_dev = 0.0;
  const double root_a = std::sqrt(a);
  for (double s : svd.singulars) spectrum_dev = std::max(spectrum_dev, std::fabs(s - root_a));
  if (spectrum_dev > tol * root_a) {
    throw Error(Errc::NotUniformSpectrum, "singular values deviate from √a");
  }

  const double k = static_cast<double>(x.rows());
  const double l = static_cast<double>(x.cols());
  const double md = static_cast<double>(m);
  Frame v(std::sqrt(k / md) * svd.left.transpose(), tol);
  Frame w(std::sqrt(l / md) * svd.right.transpose(), tol);

  MubPair pair{std::move(v), std::move(w), m, a, spectrum_dev, 0.0, 0.0, 0.0, {}, {}, {}, std::move(props)};
  const Matrix cross = pair.v.vectors().transpose() * pair.w.vectors();
  pair.recovery_residual = max_abs_diff(std::sqrt(md) * cross, x);
  pair.row_gram_residual = max_abs_diff(gram_of_rows(x), l * pair.v.gram());
  pair.col_gram_residual = max_abs_diff(gram_of_columns(x), k * pair.w.gram());
  pair.v_report = frame_report(pair.v, tol);
  pair.w_report = frame_report(pair.w, tol);
  pair.unbiased = check_mutually_unbiased(pair.v, pair.w, tol);

  if (!pair.unbiased.unbiased || pair.recovery_residual > tol) {
    throw Error(Errc::PropertyFailure, "recovered frames are not a mutually unbiased ETF pair");
  }
  return pair;
}

}  // namespace projconst
