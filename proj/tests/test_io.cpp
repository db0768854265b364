#include <cmath>
#include <limits>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "projconst/certificate.hpp"
#include "projconst/error.hpp"
#include "projconst/gf2.hpp"
#include "projconst/io.hpp"
#include "support.hpp"

using namespace projconst;

TEST_CASE("format_real") {
  CHECK(io::format_real(0.1) == "0.10000000000000001");
  CHECK(io::format_real(2.0) == "2");
  CHECK(io::format_real(std::nan("")) == "nan");
  CHECK(io::format_real(1.0 / 3, 10) == "0.3333333333");
}

TEST_CASE("sign matrix text round trip") {
  const gf2::SignMatrix x = gf2::build_sign_matrix(2);
  std::stringstream s;
  io::write_sign_matrix(s, x);
  const std::string text = s.str();
  CHECK(text.rfind("6 10\n", 0) == 0);
  CHECK(text.find("0.") == std::string::npos);
  const Matrix back = io::read_sign_matrix(s);
  CHECK(back == x.to_matrix());
}

TEST_CASE("sign matrix reader keeps malformed entries for reporting") {
  std::istringstream in("2 2\n1 0\n-1 1\n");
  const Matrix x = io::read_sign_matrix(in);
  CHECK(x(0, 1) == 0);
  std::istringstream short_in("2 2\n1 1\n-1\n");
  CHECK_THROWS_AS(io::read_sign_matrix(short_in), Error);
  std::istringstream junk("2 2\n1 1\n-1 x\n");
  CHECK_THROWS_AS(io::read_sign_matrix(junk), Error);
  std::istringstream trailing("1 1\n1\n5\n");
  CHECK_THROWS_AS(io::read_sign_matrix(trailing), Error);
}

TEST_CASE("frame round trip is bit exact") {
  const Frame f(testsupport::mercedes_benz());
  std::stringstream s;
  io::write_frame(s, f);
  const Frame g = io::read_frame(s);
  CHECK(g.vectors() == f.vectors());
}

TEST_CASE("witness round trip is bit exact") {
  SplitMix64 rng(3);
  Witness w{random_unit_vector(7, rng), random_feasible(3, 7, rng), 0.0};
  w.objective = objective(w.t, w.u);
  std::stringstream s;
  io::write_witness(s, w);
  const Witness r = io::read_witness(s);
  CHECK(r.t == w.t);
  CHECK(r.u == w.u);
  CHECK(r.objective == w.objective);
  CHECK(std::isnan(r.theta));

  w.theta = 0.25;
  std::stringstream s2;
  io::write_witness(s2, w);
  CHECK(io::read_witness(s2).theta == 0.25);
}

TEST_CASE("file wrappers report I/O errors") {
  try {
    io::load_sign_matrix("/nonexistent/dir/x.txt");
    FAIL("expected Io");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::Io);
  }
  CHECK_THROWS_AS(io::save_witness("/nonexistent/dir/w.txt", Witness{}), Error);
}

TEST_CASE("certificate JSON carries tolerances") {
  const bounds::BoundReport b = bounds::bound_report(5, 6, 10);
  const cert::Json j = cert::to_json(b);
  CHECK(j["gamma"].get<double>() == b.gamma);
  CHECK(j["integrality"][0]["tol"].get<double>() == bounds::kIntegerTol);
  CHECK(j["integrality"][0]["pass"].get<bool>());
  CHECK(j["family"]["s"].get<int>() == 2);

  cert::Certificate c;
  c.command = "bounds";
  c.bound_report = j;
  const cert::Json doc = cert::to_json(c);
  CHECK(doc["tool_version"] == "0.1.0");
  CHECK(doc["spectral_report"].is_null());
  const std::string ts = doc["timestamp"];
  CHECK(ts.size() == 20);
  CHECK(ts.back() == 'Z');
  // NaN becomes null rather than invalid JSON
  CHECK(cert::checked(std::nan(""), 1.0, false)["value"].is_null());
  // round trip through text
  CHECK(nlohmann::json::parse(doc.dump())["command"] == "bounds");
}
