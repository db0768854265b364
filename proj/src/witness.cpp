#include "projconst/witness.hpp"

#include <algorithm>
#include <cmath>

#include "projconst/bounds.hpp"
#include "projconst/error.hpp"
#include "projconst/kernels.hpp"
#include "projconst/linalg.hpp"

namespace projconst {

double feasibility_residual(const Matrix& u) {
  Matrix g = gram_of_rows(u);
  for (std::size_t i = 0; i < g.rows(); ++i) g(i, i) -= 1.0;
  return frobenius_norm(g);
}

double objective_value(std::span<const double> t, const Matrix& u) {
  if (t.size() != u.cols()) throw Error(Errc::DimMismatch, "t and U disagree on n");
  const Matrix g = entrywise_abs(gram_of_columns(u));
  return dot(t, multiply(g, t));
}

double objective(std::span<const double> t, const Matrix& u, double tol) {
  if (std::fabs(norm2(t) - 1.0) > tol) throw Error(Errc::NotFeasible, "t is not a unit vector");
  if (feasibility_residual(u) > tol) throw Error(Errc::NotFeasible, "U has non-orthonormal rows");
  return objective_value(t, u);
}

Witness build_witness(const Frame& v, const Frame& w, double tol) {
  if (v.dim() != w.dim()) throw Error(Errc::NotUnbiasedPair, "frames live in different dimensions");
  if (!check_mutually_unbiased(v, w, tol).unbiased) {
    throw Error(Errc::NotUnbiasedPair, "frames are not mutually unbiased ETFs");
  }
  const auto m = static_cast<long long>(v.dim());
  const auto k = static_cast<long long>(v.count());
  const auto l = static_cast<long long>(w.count());
  const double c2 = bounds::cos_two_theta(m, k, l);

  Witness out;
  out.theta = std::acos(std::sqrt((1.0 + c2) / 2.0));
  const double c = std::cos(out.theta);
  const double s = std::sin(out.theta);
  const double md = static_cast<double>(m);
  const double kd = static_cast<double>(k);
  const double ld = static_cast<double>(l);

  out.t.resize(static_cast<std::size_t>(k + l));
  std::fill_n(out.t.begin(), k, c / std::sqrt(kd));
  std::fill(out.t.begin() + k, out.t.end(), s / std::sqrt(ld));

  out.u = Matrix(v.dim(), static_cast<std::size_t>(k + l));
  const double fv = c * std::sqrt(md / kd);
  const double fw = s * std::sqrt(md / ld);
  for (std::size_t r = 0; r < v.dim(); ++r) {
    for (std::size_t j = 0; j < v.count(); ++j) out.u(r, j) = fv * v.vectors()(r, j);
    for (std::size_t j = 0; j < w.count(); ++j) out.u(r, v.count() + j) = fw * w.vectors()(r, j);
  }
  out.objective = objective(out.t, out.u, std::max(tol, kFeasibilityTol));
  return out;
}

Matrix sign_pattern(const Matrix& gram, double sign_tol) {
  Matrix s(gram.rows(), gram.cols());
  for (std::size_t i = 0; i < gram.rows(); ++i) {
    for (std::size_t j = 0; j < gram.cols(); ++j) {
      const double g = gram(i, j);
      if (std::fabs(g) < sign_tol) {
        throw Error(Errc::AmbiguousSign, "Gram entry within sign tolerance of zero");
      }
      s(i, j) = g >= 0.0 ? 1.0 : -1.0;
    }
  }
  return s;
}

Matrix weighted_sign_matrix(std::span<const double> t, const Matrix& u, double sign_tol) {
  return diag_scale(t, sign_pattern(gram_of_columns(u), sign_tol), t);
}

ResidualCheck check_t_eigen(const Witness& w, double gamma, double tol) {
  const Matrix g = entrywise_abs(gram_of_columns(w.u));
  std::vector<double> r = multiply(g, w.t);
  simd::axpy(-gamma, w.t, r);
  const double residual = norm2(r);
  return {residual, tol, residual <= tol};
}

ResidualCheck check_u_eigen(const Witness& w, double gamma, double tol, double sign_tol) {
  const Matrix ut = w.u.transpose();
  Matrix lhs = weighted_sign_matrix(w.t, w.u, sign_tol) * ut;
  lhs -= (gamma / static_cast<double>(w.dim())) * ut;
  const double residual = frobenius_norm(lhs);
  return {residual, tol, residual <= tol};
}

ResidualCheck check_diagonal_identity(std::span<const double> t, const Matrix& u, double lambda, double tol,
                            double sign_tol) {
  const Matrix mw = weighted_sign_matrix(t, u, sign_tol);
  const Matrix ut = u.transpose();
  const Matrix d = u * mw * ut;
  const Matrix dut = d * u;  // m × n; column i is D u_i
  double residual = 0.0;
  for (std::size_t i = 0; i < u.cols(); ++i) {
    double diag = 0.0;
    for (std::size_t r = 0; r < u.rows(); ++r) diag += u(r, i) * dut(r, i);
    residual = std::max(residual, std::fabs(diag - lambda * t[i] * t[i]));
  }
  return {residual, tol, residual <= tol};
}

DeltaAttainment check_delta_attainment(const Matrix& u, double tol) {
  if (feasibility_residual(u) > std::max(tol, kFeasibilityTol)) {
    throw Error(Errc::NotFeasible, "U has non-orthonormal rows");
  }
  const auto m = static_cast<long long>(u.rows());
  const auto n = static_cast<long long>(u.cols());
  const double md = static_cast<double>(m);
  const double nd = static_cast<double>(n);
  const Matrix g = gram_of_columns(u);
  const double diag_target = md / nd;
  const double off_target = n > 1 ? std::sqrt((nd - md) * md / (nd - 1.0)) / nd : 0.0;

  DeltaAttainment r;
  r.tol = tol;
  r.delta = bounds::delta(m, n);
  for (std::size_t i = 0; i < g.rows(); ++i) {
    for (std::size_t j = 0; j < g.cols(); ++j) {
      if (i == j) {
        r.diagonal_residual = std::max(r.diagonal_residual, std::fabs(g(i, j) - diag_target));
      } else {
        r.offdiag_residual = std::max(r.offdiag_residual, std::fabs(std::fabs(g(i, j)) - off_target));
      }
    }
  }
  const std::vector<double> uniform(u.cols(), 1.0 / std::sqrt(nd));
  r.objective_uniform = objective_value(uniform, u);
  r.attained = r.diagonal_residual <= tol && r.offdiag_residual <= tol;
  return r;
}

SpectralReport spectral_report(const Witness& w, double gamma, double tol, double sign_tol) {
  SpectralReport r;
  r.tol = tol;
  r.gamma_claimed = gamma;
  r.t_eigen_residual = check_t_eigen(w, gamma, tol).residual;
  r.leading_eigenvalue = perron_vector(entrywise_abs(gram_of_columns(w.u))).value;
  try {
    r.u_eigen_residual = check_u_eigen(w, gamma, tol, sign_tol).residual;
    r.diagonal_identity_residual = check_diagonal_identity(w.t, w.u, gamma, tol, sign_tol).residual;

    const Matrix mw = weighted_sign_matrix(w.t, w.u, sign_tol);
    const Matrix ut = w.u.transpose();
    const Matrix d = w.u * mw * ut;
    r.subspace_residual = frobenius_norm(mw * ut - ut * d);
    const SymEig eig = sym_eig(mw);
    for (std::size_t h = 0; h < w.dim(); ++h) r.mu_sum += eig.values[h];
  } catch (const Error& e) {
    if (e.code() != Errc::AmbiguousSign) throw;
    r.ambiguous_sign = true;
    const double nan = std::numeric_limits<double>::quiet_NaN();
    r.u_eigen_residual = r.diagonal_identity_residual = r.subspace_residual = r.mu_sum = nan;
  }
  return r;
}

Matrix random_feasible(std::size_t m, std::size_t n, SplitMix64& rng) {
  if (m == 0 || n < m) throw Error(Errc::BadArgs, "random_feasible needs n >= m >= 1");
  NormalSampler normal;
  Matrix u(m, n);
  for (double& x : u.values()) x = normal(rng);
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < i; ++j) simd::axpy(-simd::dot(u.row(i), u.row(j)), u.row(j), u.row(i));
      const double nrm = norm2(u.row(i));
      if (nrm < 1e-12) throw Error(Errc::DegenerateInput, "Gaussian draw is rank deficient");
      simd::scal(1.0 / nrm, u.row(i));
    }
  }
  return u;
}

std::vector<double> random_unit_vector(std::size_t n, SplitMix64& rng) {
  NormalSampler normal;
  std::vector<double> t(n);
  for (double& x : t) x = normal(rng);
  const double nrm = norm2(t);
  for (double& x : t) x /= nrm;
  return t;
}

}  // namespace projconst
