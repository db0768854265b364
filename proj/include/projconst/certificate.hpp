#pragma once

// JSON certificates. Every check is serialized as
//   {"value": <measured>, "tol": <threshold>, "pass": <bool>}
// so a certificate records the tolerance each number was held to.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"
#include "projconst/bounds.hpp"
#include "projconst/frame.hpp"
#include "projconst/optimizer.hpp"
#include "projconst/witness.hpp"

namespace projconst::cert {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kToolVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

Json checked(double value, double tol, bool pass);
Json checked_le(double value, double tol);

Json to_json(const bounds::BoundReport& r);
Json to_json(const bounds::EtfBoundReport& r);
Json to_json(const PropertyReport& r);
Json to_json(const FrameReport& r);
Json to_json(const UnbiasedCheck& r);
Json to_json(const SpectralReport& r);
Json to_json(const DeltaAttainment& r);
Json to_json(const OptResult& r, const std::string& witness_file);

struct Certificate {
  std::string command;
  Json inputs = Json::object();
  Json tolerances = Json::object();
  std::optional<Json> property_report;
  std::optional<Json> bound_report;
  std::optional<Json> spectral_report;
  std::optional<Json> opt_result;
  Json details = Json::object();
  bool passed = false;
  int exit_code = 0;
};

Json to_json(const Certificate& c);

/// Current UTC time as YYYY-MM-DDTHH:MM:SSZ.
std::string utc_timestamp();

/// Writes one JSON document; throws Error(Errc::Io) on failure.
void write_json(const std::filesystem::path& path, const Json& doc);

}  // namespace projconst::cert
