#include "projconst/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "projconst/bounds.hpp"
#include "projconst/certificate.hpp"
#include "projconst/error.hpp"
#include "projconst/frame.hpp"
#include "projconst/gf2.hpp"
#include "projconst/io.hpp"
#include "projconst/kernels.hpp"
#include "projconst/optimizer.hpp"
#include "projconst/witness.hpp"

namespace projconst::cli {
namespace {

using cert::Json;

std::string fmt(double v) { return io::format_real(v, 10); }
const char* mark(bool pass) { return pass ? "pass" : "FAIL"; }

int exit_for(Errc code) {
  switch (code) {
    case Errc::Io:
    case Errc::Parse:
      return kIoError;
    case Errc::PropertyFailure:
    case Errc::NotUniformSpectrum:
    case Errc::NotUnbiasedPair:
    case Errc::NotFeasible:
    case Errc::AmbiguousSign:
    case Errc::NoConvergence:
      return kVerifyFailed;
    default:
      return kUsage;
  }
}

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

cert::Certificate make_cert(const char* command) {
  cert::Certificate c;
  c.command = command;
  return c;
}

void emit(const std::string& path, cert::Certificate& c, int code) {
  if (path.empty()) return;
  c.exit_code = code;
  c.passed = code == kOk;
  cert::write_json(path, cert::to_json(c));
}

// ---- construct -------------------------------------------------------------

struct ConstructOpts {
  int s = 0;
  std::string out_path, json_path;
};

int cmd_construct(const ConstructOpts& o, std::ostream& out) {
  const int max_s = max_s_from_env();
  if (o.s < 2) throw UsageError("--s must be at least 2");
  if (o.s > max_s) throw UsageError("--s exceeds PROJCONST_MAX_S=" + std::to_string(max_s));
  const gf2::SignMatrix x = gf2::build_sign_matrix(o.s, max_s);
  const auto p = gf2::family_parameters(o.s);
  if (o.out_path.empty()) {
    out << "m=" << p.m << " k=" << p.k << " l=" << p.l << '\n';
    io::write_sign_matrix(out, x);
  } else {
    io::save_sign_matrix(o.out_path, x);
    out << "m=" << p.m << " k=" << p.k << " l=" << p.l << '\n';
  }
  cert::Certificate c = make_cert("construct");
  c.inputs = {{"s", o.s}, {"out", o.out_path}};
  c.details = {{"m", p.m}, {"k", p.k}, {"l", p.l}, {"max_s", max_s}};
  emit(o.json_path, c, kOk);
  return kOk;
}

// ---- verify ----------------------------------------------------------------

struct VerifyOutcome {
  PropertyReport props;
  std::optional<MubPair> pair;
  std::string failure;
  bool pass = false;
};

VerifyOutcome verify_matrix(const Matrix& x, double tol, std::optional<long long> claimed_m) {
  VerifyOutcome v{verify_properties(x, tol, claimed_m), std::nullopt, {}, false};
  if (!v.props.all_pass()) {
    v.failure = "sign-matrix properties";
    return v;
  }
  if (!v.props.integral()) {
    v.failure = "integrality";
    return v;
  }
  try {
    v.pair = frames_from_sign_matrix(x, tol);
  } catch (const Error& e) {
    v.failure = e.what();
    return v;
  }
  v.pass = true;
  return v;
}

Json verify_json(const VerifyOutcome& v) {
  Json j = Json::object();
  j["failure"] = v.failure.empty() ? Json(nullptr) : Json(v.failure);
  if (v.pair) {
    const MubPair& p = *v.pair;
    const double tol = v.props.tol;
    j["m"] = p.m;
    j["a"] = p.a;
    j["spectrum"] = cert::checked(p.spectrum_deviation, tol * std::sqrt(p.a), p.spectrum_deviation <= tol * std::sqrt(p.a));
    j["recovery"] = cert::checked_le(p.recovery_residual, tol);
    j["row_gram_identity"] = cert::checked_le(p.row_gram_residual, tol * static_cast<double>(p.properties.l));
    j["col_gram_identity"] = cert::checked_le(p.col_gram_residual, tol * static_cast<double>(p.properties.k));
    j["v_frame"] = cert::to_json(p.v_report);
    j["w_frame"] = cert::to_json(p.w_report);
    j["unbiased"] = cert::to_json(p.unbiased);
  }
  return j;
}

void print_verify(const VerifyOutcome& v, std::ostream& out) {
  const PropertyReport& r = v.props;
  out << "k=" << r.k << " l=" << r.l;
  if (r.m) out << " m=" << *r.m;
  out << " a=" << fmt(r.a_value) << " rank=" << r.rank << '\n';
  out << "P1 entries in {-1,1}      " << mark(r.p1.pass) << "  residual " << fmt(r.p1.residual) << '\n';
  out << "P2 X X^T X = a X          " << mark(r.p2.pass) << "  residual " << fmt(r.p2.residual) << '\n';
  out << "P3 equiangular rows       " << mark(r.p3.pass) << "  residual " << fmt(r.p3.residual)
      << "  c_row " << fmt(r.row_gram_offdiag) << '\n';
  out << "P4 equiangular columns    " << mark(r.p4.pass) << "  residual " << fmt(r.p4.residual)
      << "  c_col " << fmt(r.col_gram_offdiag) << '\n';
  out << "P5 rank = m               " << mark(r.p5.pass) << '\n';
  if (r.integrality) {
    out << "integrality              ";
    for (const auto& e : *r.integrality) out << ' ' << fmt(e.value);
    out << "  " << (r.integral() ? "integral" : "NOT integral") << '\n';
  }
  if (v.pair) {
    const MubPair& p = *v.pair;
    out << "V tight " << mark(p.v_report.tight.tight) << "  equiangular " << mark(p.v_report.equiangular.equiangular)
        << "  c " << fmt(p.v_report.equiangular.c) << '\n';
    out << "W tight " << mark(p.w_report.tight.tight) << "  equiangular " << mark(p.w_report.equiangular.equiangular)
        << "  c " << fmt(p.w_report.equiangular.c) << '\n';
    out << "unbiased " << mark(p.unbiased.unbiased) << "  c_cross " << fmt(p.unbiased.c) << "  expected "
        << fmt(p.unbiased.expected) << '\n';
  }
  if (!v.failure.empty()) out << "verification failed: " << v.failure << '\n';
}

struct VerifyOpts {
  std::string x_path, json_path;
  double tol = kFrameTol;
  std::optional<long long> m;
};

int cmd_verify(const VerifyOpts& o, std::ostream& out) {
  const Matrix x = io::load_sign_matrix(o.x_path);
  const VerifyOutcome v = verify_matrix(x, o.tol, o.m);
  print_verify(v, out);
  const int code = v.pass ? kOk : kVerifyFailed;
  cert::Certificate c = make_cert("verify");
  c.inputs = {{"x", o.x_path}};
  if (o.m) c.inputs["m"] = *o.m;
  c.tolerances = {{"tol", o.tol}};
  c.property_report = cert::to_json(v.props);
  c.details = verify_json(v);
  emit(o.json_path, c, code);
  return code;
}

// ---- bounds ----------------------------------------------------------------

struct BoundsOpts {
  std::optional<long long> m, k, l, n;
  std::optional<int> s;
  std::string json_path;
};

void print_bound_report(const bounds::BoundReport& r, std::ostream& out) {
  out << "m=" << r.m << " k=" << r.k << " l=" << r.l << '\n';
  out << "phi(m,k)        " << fmt(r.phi_k) << '\n';
  out << "phi(m,l)        " << fmt(r.phi_l) << '\n';
  out << "delta(m,k)      " << fmt(r.delta_k) << '\n';
  out << "delta(m,l)      " << fmt(r.delta_l) << '\n';
  out << "delta(m,k+l)    " << fmt(r.delta_total) << '\n';
  out << "gamma           " << fmt(r.gamma) << '\n';
  out << "cos(2 theta)    " << fmt(r.cos_two_theta) << '\n';
  out << "sqrt(m)         " << fmt(r.kadec_snobar) << '\n';
  out << "integrality    ";
  bool all = true;
  for (const auto& e : r.integrality) {
    out << ' ' << fmt(e.value);
    all = all && e.is_integer;
  }
  out << "  " << (all ? "integral" : "not integral") << '\n';
}

int cmd_bounds(const BoundsOpts& o, std::ostream& out) {
  cert::Certificate c = make_cert("bounds");
  c.tolerances = {{"integer", bounds::kIntegerTol}, {"family_vs_gamma", 1e-12}};
  int code = kOk;
  if (o.s) {
    if (o.m || o.k || o.l || o.n) throw UsageError("--s cannot be combined with --m/--k/--l/--n");
    if (*o.s < 2) throw UsageError("--s must be at least 2");
    const bounds::FamilyBound fb = bounds::family_bound(*o.s);
    const bounds::BoundReport r = bounds::bound_report(fb.m, fb.k, fb.l);
    print_bound_report(r, out);
    const double diff = std::fabs(fb.bound - r.gamma);
    const bool consistent = diff <= 1e-12;
    out << "family bound    " << fmt(fb.bound) << "  (s=" << *o.s << ")\n";
    out << "family - gamma  " << fmt(diff) << "  " << mark(consistent) << '\n';
    out << "lambda(" << fb.m << "," << fb.k + fb.l << ") >= " << fmt(fb.bound) << "  <= delta " << fmt(r.delta_total)
        << '\n';
    if (*o.s == 3) {
      // A 126-vector ETF in R^21 exists, so delta(21,126) is attained.
      const double d = bounds::delta(21, 126);
      out << "note: delta(21,126) = 13/3 = " << fmt(d) << " exceeds the family bound " << fmt(fb.bound) << '\n';
      c.details["delta_21_126"] = d;
    }
    c.inputs = {{"s", *o.s}};
    c.bound_report = cert::to_json(r);
    if (!consistent) code = kVerifyFailed;
  } else if (o.m && o.k && o.l && !o.n) {
    if (*o.m < 1 || *o.k < *o.m || *o.l < *o.m) throw UsageError("need 1 <= m <= k and m <= l");
    const bounds::BoundReport r = bounds::bound_report(*o.m, *o.k, *o.l);
    print_bound_report(r, out);
    c.inputs = {{"m", *o.m}, {"k", *o.k}, {"l", *o.l}};
    c.bound_report = cert::to_json(r);
  } else if (o.m && o.n && !o.k && !o.l) {
    if (*o.m < 1 || *o.n < *o.m) throw UsageError("need 1 <= m <= n");
    const bounds::EtfBoundReport r = bounds::etf_bound_report(*o.m, *o.n);
    out << "m=" << r.m << " n=" << r.n << '\n';
    out << "phi(m,n)        " << fmt(r.phi) << '\n';
    out << "delta(m,n)      " << fmt(r.delta) << '\n';
    out << "sqrt(m)         " << fmt(r.kadec_snobar) << '\n';
    c.inputs = {{"m", *o.m}, {"n", *o.n}};
    c.bound_report = cert::to_json(r);
  } else {
    throw UsageError("give --m --k --l, --m --n, or --s");
  }
  emit(o.json_path, c, code);
  return code;
}

// ---- witness ---------------------------------------------------------------

struct WitnessOpts {
  std::optional<int> s;
  std::string x_path, v_path, w_path, out_path, json_path;
  double tol = kStationaryTol;
  double frame_tol = kFrameTol;
};

struct WitnessOutcome {
  Witness w;
  long long m = 0, k = 0, l = 0;
  double gamma = 0.0;
  double objective_gap = 0.0;
  SpectralReport spectral;
  bool pass = false;
};

WitnessOutcome witness_from_frames(const Frame& v, const Frame& w, double tol, double frame_tol) {
  WitnessOutcome o;
  o.w = build_witness(v, w, frame_tol);
  o.m = static_cast<long long>(v.dim());
  o.k = static_cast<long long>(v.count());
  o.l = static_cast<long long>(w.count());
  o.gamma = bounds::gamma(o.m, o.k, o.l);
  o.objective_gap = std::fabs(o.w.objective - o.gamma);
  o.spectral = spectral_report(o.w, o.gamma, tol);
  o.pass = o.spectral.stationary() && o.objective_gap <= tol;
  return o;
}

void print_witness(const WitnessOutcome& o, std::ostream& out) {
  const SpectralReport& r = o.spectral;
  out << "m=" << o.m << " k=" << o.k << " l=" << o.l << " n=" << o.k + o.l << '\n';
  out << "objective       " << fmt(o.w.objective) << '\n';
  out << "gamma           " << fmt(o.gamma) << "  |objective - gamma| " << fmt(o.objective_gap) << '\n';
  out << "theta           " << fmt(o.w.theta) << '\n';
  out << "t-eigen resid.  " << fmt(r.t_eigen_residual) << "  " << mark(r.t_eigen_residual <= r.tol) << '\n';
  out << "U-eigen resid.  " << fmt(r.u_eigen_residual) << "  " << mark(!r.ambiguous_sign && r.u_eigen_residual <= r.tol)
      << '\n';
  out << "diagonal resid. " << fmt(r.diagonal_identity_residual) << "  "
      << mark(!r.ambiguous_sign && r.diagonal_identity_residual <= r.tol) << '\n';
  out << "top eigenvalue of |U^T U|  " << fmt(r.leading_eigenvalue) << '\n';
  out << "sum of top-m eigenvalues of T sgn T  " << fmt(r.mu_sum) << '\n';
  out << (o.pass ? "stationary" : "NOT stationary") << '\n';
}

int cmd_witness(const WitnessOpts& o, std::ostream& out) {
  const int sources = (o.s ? 1 : 0) + (o.x_path.empty() ? 0 : 1) + (o.v_path.empty() && o.w_path.empty() ? 0 : 1);
  if (sources != 1) throw UsageError("give exactly one of --s, --x, or --v with --w");
  if (!o.v_path.empty() && o.w_path.empty()) throw UsageError("--v requires --w");
  if (o.v_path.empty() && !o.w_path.empty()) throw UsageError("--w requires --v");

  cert::Certificate c = make_cert("witness");
  c.tolerances = {{"stationary", o.tol}, {"frame", o.frame_tol}, {"sign", kSignTol}};
  WitnessOutcome res;
  if (!o.v_path.empty()) {
    const Frame v = io::load_frame(o.v_path, o.frame_tol);
    const Frame w = io::load_frame(o.w_path, o.frame_tol);
    c.inputs = {{"v", o.v_path}, {"w", o.w_path}};
    res = witness_from_frames(v, w, o.tol, o.frame_tol);
  } else {
    Matrix x;
    if (o.s) {
      const int max_s = max_s_from_env();
      if (*o.s < 2) throw UsageError("--s must be at least 2");
      if (*o.s > max_s) throw UsageError("--s exceeds PROJCONST_MAX_S=" + std::to_string(max_s));
      x = gf2::build_sign_matrix(*o.s, max_s).to_matrix();
      c.inputs = {{"s", *o.s}};
    } else {
      x = io::load_sign_matrix(o.x_path);
      c.inputs = {{"x", o.x_path}};
    }
    const VerifyOutcome v = verify_matrix(x, o.frame_tol, std::nullopt);
    c.property_report = cert::to_json(v.props);
    if (!v.pass) {
      out << "not a mutually unbiased ETF pair: " << v.failure << '\n';
      emit(o.json_path, c, kVerifyFailed);
      return kVerifyFailed;
    }
    res = witness_from_frames(v.pair->v, v.pair->w, o.tol, o.frame_tol);
  }
  print_witness(res, out);
  if (!o.out_path.empty()) io::save_witness(o.out_path, res.w);
  c.inputs["out"] = o.out_path;
  c.spectral_report = cert::to_json(res.spectral);
  c.details = {{"objective", res.w.objective},
               {"gamma", res.gamma},
               {"objective_vs_gamma", cert::checked_le(res.objective_gap, o.tol)},
               {"theta", res.w.theta},
               {"feasibility", cert::checked_le(feasibility_residual(res.w.u), kFeasibilityTol)}};
  const int code = res.pass ? kOk : kVerifyFailed;
  emit(o.json_path, c, code);
  return code;
}

// ---- optimize --------------------------------------------------------------

struct OptimizeOpts {
  OptimizerConfig cfg;
  std::string warm_path, out_path, json_path;
};

void print_histogram(const OptResult& r, std::ostream& out) {
  // Restart values rounded to 6 significant digits, most frequent first.
  std::map<std::string, std::size_t> counts;
  std::size_t failed = 0;
  for (const auto& v : r.value_histogram) {
    if (v) ++counts[io::format_real(*v, 6)];
    else ++failed;
  }
  std::vector<std::pair<std::string, std::size_t>> rows(counts.begin(), counts.end());
  std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return std::stod(a.first) > std::stod(b.first);
  });
  out << "value histogram (6 digits):\n";
  const std::size_t shown = std::min<std::size_t>(rows.size(), 8);
  for (std::size_t i = 0; i < shown; ++i) out << "  " << rows[i].first << "  x" << rows[i].second << '\n';
  if (rows.size() > shown) out << "  ... " << rows.size() - shown << " more distinct values\n";
  if (failed) out << "  failed restarts: " << failed << '\n';
}

Json config_json(const OptimizerConfig& cfg) {
  return Json{{"m", cfg.m},
              {"n", cfg.n},
              {"restarts", cfg.restarts},
              {"seed", cfg.seed},
              {"max_iters", cfg.max_iters},
              {"anneal_stages", cfg.anneal_stages},
              {"anneal_steps", cfg.anneal_steps},
              {"anneal_start", cfg.anneal_start},
              {"anneal_end", cfg.anneal_end},
              {"warm_start", cfg.warm_start.has_value()}};
}

int cmd_optimize(OptimizeOpts o, std::ostream& out) {
  if (!o.warm_path.empty()) {
    Witness w = io::load_witness(o.warm_path);
    if (w.dim() != o.cfg.m || w.count() != o.cfg.n) {
      throw UsageError("warm-start witness is " + std::to_string(w.dim()) + "x" + std::to_string(w.count()) +
                       ", expected " + std::to_string(o.cfg.m) + "x" + std::to_string(o.cfg.n));
    }
    o.cfg.warm_start = std::move(w);
  }
  try {
    o.cfg.validate();
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  const auto t0 = std::chrono::steady_clock::now();
  const OptResult r = maximize(o.cfg);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const double d = bounds::delta(static_cast<long long>(o.cfg.m), static_cast<long long>(o.cfg.n));

  out << "m=" << r.m << " n=" << r.n << " restarts=" << r.value_histogram.size() << " seed=" << o.cfg.seed << '\n';
  out << "best value      " << fmt(r.value) << "  (restart " << r.best_restart << ", " << r.iterations_used
      << " polish iterations)\n";
  out << "delta(m,n)      " << fmt(d) << '\n';
  out << "converged       " << r.restarts_converged << "/" << r.value_histogram.size() << '\n';
  print_histogram(r, out);
  out << "time            " << fmt(secs) << " s\n";
  if (!o.out_path.empty()) io::save_witness(o.out_path, r.best);

  cert::Certificate c = make_cert("optimize");
  c.inputs = config_json(o.cfg);
  c.inputs["warm"] = o.warm_path;
  c.tolerances = {{"conv_tol", o.cfg.conv_tol}, {"sign", o.cfg.sign_tol}, {"upper_bound", 1e-9}};
  c.opt_result = cert::to_json(r, o.out_path);
  c.details = {{"delta", d},
               {"below_delta", cert::checked(r.value - d, 1e-9, r.value <= d + 1e-9)},
               {"feasibility", cert::checked_le(feasibility_residual(r.best.u), kFeasibilityTol)},
               {"seconds", secs}};
  emit(o.json_path, c, kOk);
  return kOk;
}

// ---- certify ---------------------------------------------------------------

struct CertifyOpts {
  int s = 0;
  std::uint64_t seed = 1;
  std::size_t opt_iters = 3;
  double tol = kStationaryTol;
  double frame_tol = kFrameTol;
  std::string json_path;
};

int cmd_certify(const CertifyOpts& o, std::ostream& out) {
  cert::Certificate c = make_cert("certify");
  c.inputs = {{"s", o.s}, {"seed", o.seed}, {"opt_iters", o.opt_iters}};
  c.tolerances = {{"stationary", o.tol}, {"frame", o.frame_tol}, {"sign", kSignTol}, {"warm_start_drop", 1e-9}};
  Json stages = Json::object();
  auto finish = [&](int code) {
    c.details["stages"] = stages;
    emit(o.json_path, c, code);
    out << (code == kOk ? "certificate: PASS" : "certificate: FAIL") << '\n';
    return code;
  };

  // construct
  const int max_s = max_s_from_env();
  if (o.s < 2) throw UsageError("--s must be at least 2");
  if (o.s > max_s) throw UsageError("--s exceeds PROJCONST_MAX_S=" + std::to_string(max_s));
  const gf2::SignMatrix sx = gf2::build_sign_matrix(o.s, max_s);
  const auto fp = gf2::family_parameters(o.s);
  out << "[construct] m=" << fp.m << " k=" << fp.k << " l=" << fp.l << '\n';
  stages["construct"] = {{"m", fp.m}, {"k", fp.k}, {"l", fp.l}, {"pass", true}};

  // verify
  const VerifyOutcome v = verify_matrix(sx.to_matrix(), o.frame_tol, fp.m);
  out << "[verify] a=" << fmt(v.props.a_value) << " rank=" << v.props.rank;
  if (v.pair) out << " c_cross=" << fmt(v.pair->unbiased.c);
  out << "  " << mark(v.pass) << '\n';
  c.property_report = cert::to_json(v.props);
  stages["verify"] = verify_json(v);
  stages["verify"]["pass"] = v.pass;
  if (!v.pass) return finish(kVerifyFailed);

  // witness
  const WitnessOutcome w = witness_from_frames(v.pair->v, v.pair->w, o.tol, o.frame_tol);
  out << "[witness] objective=" << fmt(w.w.objective) << " t_eigen=" << fmt(w.spectral.t_eigen_residual)
      << " u_eigen=" << fmt(w.spectral.u_eigen_residual) << " diagonal=" << fmt(w.spectral.diagonal_identity_residual) << "  "
      << mark(w.pass) << '\n';
  c.spectral_report = cert::to_json(w.spectral);
  stages["witness"] = {{"objective", w.w.objective},
                       {"objective_vs_gamma", cert::checked_le(w.objective_gap, o.tol)},
                       {"theta", w.w.theta},
                       {"pass", w.pass}};
  if (!w.pass) return finish(kVerifyFailed);

  // bounds
  const bounds::BoundReport br = bounds::bound_report(fp.m, fp.k, fp.l);
  const double fam = bounds::family_bound(o.s).bound;
  const double fam_gap = std::fabs(fam - br.gamma);
  bool integral = true;
  for (const auto& e : br.integrality) integral = integral && e.is_integer;
  const bool bounds_pass = fam_gap <= 1e-12 && integral && br.gamma <= br.delta_total;
  out << "[bounds] gamma=" << fmt(br.gamma) << " family=" << fmt(fam) << " delta=" << fmt(br.delta_total) << "  "
      << mark(bounds_pass) << '\n';
  c.bound_report = cert::to_json(br);
  stages["bounds"] = {{"family_vs_gamma", cert::checked_le(fam_gap, 1e-12)},
                      {"gamma_le_delta", cert::checked(br.gamma - br.delta_total, 0.0, br.gamma <= br.delta_total)},
                      {"integral", integral},
                      {"pass", bounds_pass}};
  if (!bounds_pass) return finish(kVerifyFailed);

  // short warm-started optimize: the witness must not be improved away from
  // by more than rounding, nor lose value
  OptimizerConfig cfg;
  cfg.m = static_cast<std::size_t>(fp.m);
  cfg.n = static_cast<std::size_t>(fp.k + fp.l);
  cfg.restarts = 1;
  cfg.max_iters = o.opt_iters;
  cfg.seed = o.seed;
  cfg.warm_start = w.w;
  cfg.threads = 1;
  const OptResult r = maximize(cfg);
  const bool opt_pass = r.value >= br.gamma - 1e-9 && r.value <= br.delta_total + 1e-9;
  out << "[optimize] warm-started value=" << fmt(r.value) << " iterations=" << r.iterations_used << "  "
      << mark(opt_pass) << '\n';
  c.opt_result = cert::to_json(r, "");
  stages["optimize"] = {{"value_vs_gamma", cert::checked(br.gamma - r.value, 1e-9, opt_pass)}, {"pass", opt_pass}};
  if (!opt_pass) return finish(kVerifyFailed);
  return finish(kOk);
}

// ---- equiv -----------------------------------------------------------------

int cmd_equiv(const std::string& x_path, std::ostream& out) {
  const gf2::SignMatrix a =
      x_path.empty() ? gf2::reference_sign_matrix_6x10() : gf2::SignMatrix::from_matrix(io::load_sign_matrix(x_path));
  const gf2::SignMatrix b = gf2::build_sign_matrix(2);
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    out << "shape " << a.rows() << "x" << a.cols() << " differs from the s=2 construction (6x10)\n";
    return kVerifyFailed;
  }
  const auto p = gf2::find_signed_permutation(a, b);
  if (!p) {
    out << "no signed row/column permutation maps the matrix onto the s=2 construction\n";
    return kVerifyFailed;
  }
  auto list = [&](const auto& v) {
    std::ostringstream s;
    for (std::size_t i = 0; i < v.size(); ++i) s << (i ? " " : "") << v[i];
    return s.str();
  };
  out << "equivalent to the s=2 construction\n";
  out << "row_perm  " << list(p->row_perm) << '\n';
  out << "row_signs " << list(p->row_signs) << '\n';
  out << "col_perm  " << list(p->col_perm) << '\n';
  out << "col_signs " << list(p->col_signs) << '\n';
  return kOk;
}

}  // namespace

int max_s_from_env() {
  const char* v = std::getenv("PROJCONST_MAX_S");
  if (!v || !*v) return gf2::kDefaultMaxS;
  char* end = nullptr;
  const long s = std::strtol(v, &end, 10);
  if (*end != '\0' || s < 2 || s > 15) return gf2::kDefaultMaxS;
  return static_cast<int>(s);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mutually unbiased ETF constructions and projection-constant bounds", "projconst"};
  app.require_subcommand(1);
  std::string isa = "auto";
  app.add_option("--isa", isa, "Kernel set: auto, scalar, avx2")->check(CLI::IsMember({"auto", "scalar", "avx2"}));

  ConstructOpts co;
  auto* construct = app.add_subcommand("construct", "Build the quadric sign matrix for parameter s");
  construct->add_option("--s", co.s, "Family parameter, s >= 2")->required();
  construct->add_option("--out", co.out_path, "Sign-matrix output file (stdout if omitted)");
  construct->add_option("--json", co.json_path, "Certificate JSON path");

  VerifyOpts vo;
  auto* verify = app.add_subcommand("verify", "Check a sign matrix and recover its frame pair");
  verify->add_option("--x", vo.x_path, "Sign-matrix file")->required();
  verify->add_option("--m", vo.m, "Claimed dimension (default kl/a)");
  verify->add_option("--tol", vo.tol, "Tolerance")->capture_default_str();
  verify->add_option("--json", vo.json_path, "Certificate JSON path");

  BoundsOpts bo;
  auto* bnd = app.add_subcommand("bounds", "Closed-form bounds");
  bnd->add_option("--m", bo.m, "Dimension");
  bnd->add_option("--k", bo.k, "Size of the first frame");
  bnd->add_option("--l", bo.l, "Size of the second frame");
  bnd->add_option("--n", bo.n, "Number of vectors");
  bnd->add_option("--s", bo.s, "Quadric family parameter");
  bnd->add_option("--json", bo.json_path, "Certificate JSON path");

  WitnessOpts wo;
  int ws = 0;
  auto* wit = app.add_subcommand("witness", "Build and check the explicit stationary point");
  auto* ws_opt = wit->add_option("--s", ws, "Family parameter");
  wit->add_option("--x", wo.x_path, "Sign-matrix file");
  wit->add_option("--v", wo.v_path, "First frame file");
  wit->add_option("--w", wo.w_path, "Second frame file");
  wit->add_option("--out", wo.out_path, "Witness output file");
  wit->add_option("--tol", wo.tol, "Stationarity tolerance")->capture_default_str();
  wit->add_option("--frame-tol", wo.frame_tol, "Frame tolerance")->capture_default_str();
  wit->add_option("--json", wo.json_path, "Certificate JSON path");

  OptimizeOpts oo;
  oo.cfg.seed = 1;
  auto* opt = app.add_subcommand("optimize", "Random-restart maximization");
  opt->add_option("--m", oo.cfg.m, "Dimension")->required();
  opt->add_option("--n", oo.cfg.n, "Number of coordinates")->required();
  opt->add_option("--restarts", oo.cfg.restarts, "Restarts")->capture_default_str();
  opt->add_option("--seed", oo.cfg.seed, "Seed")->capture_default_str();
  opt->add_option("--max-iters", oo.cfg.max_iters, "Polish iterations per restart")->capture_default_str();
  opt->add_option("--conv-tol", oo.cfg.conv_tol, "Convergence tolerance")->capture_default_str();
  opt->add_option("--anneal-stages", oo.cfg.anneal_stages, "Continuation stages (0 disables)")->capture_default_str();
  opt->add_option("--anneal-steps", oo.cfg.anneal_steps, "Steps per stage")->capture_default_str();
  opt->add_option("--sign-tol", oo.cfg.sign_tol, "Sign ambiguity threshold")->capture_default_str();
  opt->add_option("--threads", oo.cfg.threads, "Worker threads (0: all cores)")->capture_default_str();
  opt->add_option("--warm", oo.warm_path, "Warm-start witness file");
  opt->add_option("--out", oo.out_path, "Best witness output file");
  opt->add_option("--json", oo.json_path, "Certificate JSON path");

  CertifyOpts cfo;
  auto* cer = app.add_subcommand("certify", "construct, verify, witness, bounds, warm optimize");
  cer->add_option("--s", cfo.s, "Family parameter")->required();
  cer->add_option("--seed", cfo.seed, "Seed")->capture_default_str();
  cer->add_option("--opt-iters", cfo.opt_iters, "Warm-started polish iterations")->capture_default_str();
  cer->add_option("--tol", cfo.tol, "Stationarity tolerance")->capture_default_str();
  cer->add_option("--json", cfo.json_path, "Certificate JSON path");

  std::string eq_path;
  auto* eq = app.add_subcommand("equiv", "Search for a signed permutation onto the s=2 construction");
  eq->add_option("--x", eq_path, "Sign-matrix file (default: the reference 6x10 matrix)");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  if (isa == "scalar") simd::set_isa(simd::Isa::Scalar);
  if (isa == "avx2" && !simd::set_isa(simd::Isa::Avx2)) {
    err << "error: avx2 kernels are not available on this machine\n";
    return kUsage;
  }

  try {
    if (*construct) return cmd_construct(co, out);
    if (*verify) return cmd_verify(vo, out);
    if (*bnd) return cmd_bounds(bo, out);
    if (*wit) {
      if (*ws_opt) wo.s = ws;
      return cmd_witness(wo, out);
    }
    if (*opt) return cmd_optimize(oo, out);
    if (*cer) return cmd_certify(cfo, out);
    if (*eq) return cmd_equiv(eq_path, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_for(e.code());
  }
  return kUsage;
}

}  // namespace projconst::cli
