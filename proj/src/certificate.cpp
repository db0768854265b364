#include "projconst/certificate.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>

#include "projconst/error.hpp"

namespace projconst::cert {
namespace {

Json number(double v) {
  if (std::isnan(v) || std::isinf(v)) return nullptr;
  return v;
}

Json property(const PropertyCheck& c, double tol) { return checked(c.residual, tol, c.pass); }

}  // namespace

Json checked(double value, double tol, bool pass) {
  return Json{{"value", number(value)}, {"tol", tol}, {"pass", pass}};
}

Json checked_le(double value, double tol) { return checked(value, tol, value <= tol); }

Json to_json(const bounds::BoundReport& r) {
  Json j{
      {"m", r.m},
      {"k", r.k},
      {"l", r.l},
      {"phi_k", r.phi_k},
      {"phi_l", r.phi_l},
      {"delta_k", r.delta_k},
      {"delta_l", r.delta_l},
      {"delta_k_plus_l", r.delta_total},
      {"gamma", r.gamma},
      {"cos_two_theta", r.cos_two_theta},
      {"kadec_snobar", r.kadec_snobar},
  };
  Json integ = Json::array();
  for (const auto& e : r.integrality) {
    integ.push_back(checked(e.value, bounds::kIntegerTol, e.is_integer));
  }
  j["integrality"] = integ;
  if (r.family_bound) {
    const double diff = std::fabs(*r.family_bound - r.gamma);
    j["family"] = Json{{"s", *r.family_s},
                       {"bound", *r.family_bound},
                       {"matches_gamma", checked_le(diff, 1e-12)}};
  }
  return j;
}

Json to_json(const bounds::EtfBoundReport& r) {
  return Json{{"m", r.m}, {"n", r.n}, {"phi", r.phi}, {"delta", r.delta}, {"kadec_snobar", r.kadec_snobar}};
}

Json to_json(const PropertyReport& r) {
  Json j{
      {"k", r.k},
      {"l", r.l},
      {"p1", property(r.p1, 0.0)},
      {"p2", property(r.p2, r.tol * std::sqrt(static_cast<double>(r.k * r.l)) * r.a_value)},
      {"p3", property(r.p3, r.tol)},
      {"p4", property(r.p4, r.tol)},
      {"p5", property(r.p5, 0.0)},
      {"a", r.a_value},
      {"rank", r.rank},
      {"m", r.m ? Json(*r.m) : Json(nullptr)},
      {"m_claimed", r.m_claimed},
      {"row_gram_offdiag", r.row_gram_offdiag},
      {"col_gram_offdiag", r.col_gram_offdiag},
      {"all_pass", r.all_pass()},
  };
  if (r.integrality) {
    Json integ = Json::array();
    for (const auto& e : *r.integrality) {
      integ.push_back(checked(e.value, bounds::kIntegerTol, e.is_integer));
    }
    j["integrality"] = integ;
  } else {
    j["integrality"] = nullptr;
  }
  return j;
}

Json to_json(const FrameReport& r) {
  return Json{
      {"tight", checked(r.tight.residual, r.tight.tol, r.tight.tight)},
      {"equiangular", checked(r.equiangular.max_deviation, r.equiangular.tol, r.equiangular.equiangular)},
      {"c", r.equiangular.c},
      {"coherence_expected", r.coherence_expected},
  };
}

Json to_json(const UnbiasedCheck& r) {
  return Json{
      {"unbiased", r.unbiased},
      {"preconditions_met", r.preconditions_met},
      {"c", r.c},
      {"expected", r.expected},
      {"spread", checked(r.max_deviation, r.tol, r.max_deviation <= r.tol)},
      {"c_minus_expected", checked_le(std::fabs(r.c - r.expected), r.tol)},
  };
}

Json to_json(const SpectralReport& r) {
  return Json{
      {"gamma_claimed", r.gamma_claimed},
      {"leading_eigenvalue", r.leading_eigenvalue},
      {"t_eigen", checked_le(r.t_eigen_residual, r.tol)},
      {"u_eigen", checked(r.u_eigen_residual, r.tol, !r.ambiguous_sign && r.u_eigen_residual <= r.tol)},
      {"diagonal_identity", checked(r.diagonal_identity_residual, r.tol, !r.ambiguous_sign && r.diagonal_identity_residual <= r.tol)},
      {"subspace", checked(r.subspace_residual, r.tol, !r.ambiguous_sign && r.subspace_residual <= r.tol)},
      {"mu_sum", number(r.mu_sum)},
      {"ambiguous_sign", r.ambiguous_sign},
      {"stationary", r.stationary()},
  };
}

Json to_json(const DeltaAttainment& r) {
  return Json{
      {"attained", r.attained},
      {"diagonal", checked_le(r.diagonal_residual, r.tol)},
      {"offdiagonal", checked_le(r.offdiag_residual, r.tol)},
      {"objective_uniform", r.objective_uniform},
      {"delta", r.delta},
  };
}

Json to_json(const OptResult& r, const std::string& witness_file) {
  Json hist = Json::array();
  for (const auto& v : r.value_histogram) hist.push_back(v ? Json(*v) : Json(nullptr));
  std::size_t non_monotone = 0, ambiguous = 0, ties = 0;
  for (const auto& o : r.restarts) {
    non_monotone += o.non_monotone_steps;
    ambiguous += o.ambiguous_sign_events;
    ties += o.tie_events;
  }
  return Json{
      {"m", r.m},
      {"n", r.n},
      {"value", r.value},
      {"restarts", r.value_histogram.size()},
      {"histogram", hist},
      {"witness_file", witness_file.empty() ? Json(nullptr) : Json(witness_file)},
      {"best_restart", r.best_restart},
      {"iterations_used", r.iterations_used},
      {"restarts_converged", r.restarts_converged},
      {"non_monotone_steps", non_monotone},
      {"ambiguous_sign_events", ambiguous},
      {"eigen_tie_events", ties},
  };
}

Json to_json(const Certificate& c) {
  Json j{
      {"schema_version", kSchemaVersion},
      {"tool_version", kToolVersion},
      {"command", c.command},
      {"timestamp", utc_timestamp()},
      {"inputs", c.inputs},
      {"tolerances", c.tolerances},
      {"passed", c.passed},
      {"exit_code", c.exit_code},
  };
  j["property_report"] = c.property_report ? *c.property_report : Json(nullptr);
  j["bound_report"] = c.bound_report ? *c.bound_report : Json(nullptr);
  j["spectral_report"] = c.spectral_report ? *c.spectral_report : Json(nullptr);
  j["opt_result"] = c.opt_result ? *c.opt_result : Json(nullptr);
  j["details"] = c.details;
  return j;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void write_json(const std::filesystem::path& path, const Json& doc) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::Io, "cannot write " + path.string());
  out << doc.dump(2) << '\n';
  out.flush();
  if (!out) throw Error(Errc::Io, "write failed for " + path.string());
}

}  // namespace projconst::cert
