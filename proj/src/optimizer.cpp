#include "projconst/optimizer.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "projconst/error.hpp"
#include "projconst/linalg.hpp"
#include "projconst/rng.hpp"

namespace projconst {
namespace {

constexpr double kTieTol = 1e-10;

RefineU top_rows(const Matrix& mw, std::size_t m) {
  const SymEig eig = sym_eig(mw);
  const std::size_t n = mw.rows();
  RefineU out;
  out.u = Matrix(m, n);
  for (std::size_t h = 0; h < m; ++h) {
    out.mu_sum += eig.values[h];
    for (std::size_t i = 0; i < n; ++i) out.u(h, i) = eig.vectors(i, h);
  }
  if (m < n) {
    const double scale = std::max(1.0, std::fabs(eig.values.front()));
    out.eigen_tie = std::fabs(eig.values[m - 1] - eig.values[m]) <= kTieTol * scale;
  }
  return out;
}

RestartOutcome run_restart(const OptimizerConfig& cfg, std::size_t index, Witness& final_point,
                           std::vector<double>& trace) {
  RestartOutcome outcome;
  Matrix u;
  std::vector<double> t;
  double value = 0.0;

  if (index == 0 && cfg.warm_start) {
    u = cfg.warm_start->u;
    t = cfg.warm_start->t;
    value = objective_value(t, u);
  } else {
    SplitMix64 rng = SplitMix64::stream(cfg.seed, index);
    u = random_feasible(cfg.m, cfg.n, rng);
    if (cfg.anneal_stages > 0) {
      t.assign(cfg.n, 1.0 / std::sqrt(static_cast<double>(cfg.n)));
      const double ratio = cfg.anneal_stages > 1
                               ? std::pow(cfg.anneal_end / cfg.anneal_start,
                                          1.0 / static_cast<double>(cfg.anneal_stages - 1))
                               : 1.0;
      double eps = cfg.anneal_start;
      for (std::size_t stage = 0; stage < cfg.anneal_stages; ++stage, eps *= ratio) {
        for (std::size_t step = 0; step < cfg.anneal_steps; ++step) {
          u = refine_u_smoothed(t, u, eps).u;
          t = refine_t_smoothed(u, eps).t;
        }
      }
    }
    RefineT rt = refine_t(u);
    t = std::move(rt.t);
    value = rt.value;
  }

  trace.clear();
  for (std::size_t it = 0; it < cfg.max_iters; ++it) {
    RefineU ru = refine_u(t, u, cfg.sign_tol);
    outcome.ambiguous_sign_events += ru.ambiguous_sign ? 1 : 0;
    outcome.tie_events += ru.eigen_tie ? 1 : 0;
    u = std::move(ru.u);
    RefineT rt = refine_t(u);
    t = std::move(rt.t);
    ++outcome.iterations;
    trace.push_back(rt.value);
    if (rt.value < value) ++outcome.non_monotone_steps;
    const double change = std::fabs(rt.value - value);
    value = rt.value;
    if (change < cfg.conv_tol) {
      outcome.converged = true;
      break;
    }
  }
  if (cfg.max_iters == 0) outcome.converged = true;

  final_point.t = std::move(t);
  final_point.u = std::move(u);
  final_point.objective = objective_value(final_point.t, final_point.u);
  outcome.value = final_point.objective;
  return outcome;
}

}  // namespace

void OptimizerConfig::validate() const {
  if (m < 1 || n < m) throw Error(Errc::BadArgs, "need n >= m >= 1");
  if (restarts < 1) throw Error(Errc::BadArgs, "need at least one restart");
  if (!(conv_tol > 0.0)) throw Error(Errc::BadArgs, "conv_tol must be positive");
  if (anneal_stages > 0 && !(anneal_start > 0.0 && anneal_end > 0.0 && anneal_steps > 0)) {
    throw Error(Errc::BadArgs, "continuation needs positive ε range and step count");
  }
  if (warm_start) {
    if (warm_start->u.rows() != m || warm_start->u.cols() != n || warm_start->t.size() != n) {
      throw Error(Errc::BadArgs, "warm start has the wrong shape");
    }
  }
}

RefineT refine_t(const Matrix& u) {
  PerronPair p = perron_vector(entrywise_abs(gram_of_columns(u)));
  return {std::move(p.vector), p.value};
}

RefineU refine_u(std::span<const double> t, const Matrix& u_prev, double sign_tol) {
  Matrix gram = gram_of_columns(u_prev);
  bool ambiguous = false;
  for (double& g : gram.values()) {
    if (std::fabs(g) < sign_tol) ambiguous = true;
    g = g >= 0.0 || std::fabs(g) < sign_tol ? 1.0 : -1.0;
  }
  RefineU out = top_rows(diag_scale(t, gram, t), u_prev.rows());
  out.ambiguous_sign = ambiguous;
  return out;
}

RefineT refine_t_smoothed(const Matrix& u, double eps) {
  Matrix gram = gram_of_columns(u);
  for (double& g : gram.values()) g = std::hypot(g, eps);
  PerronPair p = perron_vector(gram);
  return {std::move(p.vector), p.value};
}

RefineU refine_u_smoothed(std::span<const double> t, const Matrix& u_prev, double eps) {
  Matrix gram = gram_of_columns(u_prev);
  for (double& g : gram.values()) g /= std::hypot(g, eps);
  return top_rows(diag_scale(t, gram, t), u_prev.rows());
}

OptResult maximize(const OptimizerConfig& cfg) {
  cfg.validate();
  const std::size_t count = cfg.restarts;
  std::vector<RestartOutcome> outcomes(count);
  std::vector<Witness> points(count);
  std::vector<std::vector<double>> traces(count);

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t r = next.fetch_add(1); r < count; r = next.fetch_add(1)) {
      try {
        outcomes[r] = run_restart(cfg, r, points[r], traces[r]);
      } catch (const Error&) {
        outcomes[r] = RestartOutcome{};
      }
    }
  };
  std::size_t threads = cfg.threads != 0 ? cfg.threads : std::thread::hardware_concurrency();
  threads = std::clamp<std::size_t>(threads, 1, count);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t i = 0; i < threads; ++i) pool.emplace_back(worker);
  }

  OptResult result;
  result.m = cfg.m;
  result.n = cfg.n;
  result.value_histogram.reserve(count);
  std::optional<std::size_t> best;
  for (std::size_t r = 0; r < count; ++r) {
    result.value_histogram.push_back(outcomes[r].value);
    if (outcomes[r].converged && outcomes[r].value) ++result.restarts_converged;
    if (outcomes[r].value && (!best || *outcomes[r].value > *outcomes[*best].value)) best = r;
  }
  if (!best) throw Error(Errc::NoConvergence, "every restart failed");
  result.best_restart = *best;
  result.best = std::move(points[*best]);
  result.value = result.best.objective;
  result.iterations_used = outcomes[*best].iterations;
  result.best_trace = std::move(traces[*best]);
  result.restarts = std::move(outcomes);
  return result;
}

SpectralReport certify(const OptResult& result, double tol) {
  return spectral_report(result.best, result.value, tol);
}

}  // namespace projconst
