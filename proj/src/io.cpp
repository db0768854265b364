#include "projconst/io.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>

#include "projconst/error.hpp"

namespace projconst::io {
namespace {

std::string next_token(std::istream& in, const char* what) {
  std::string token;
  if (!(in >> token)) throw Error(Errc::Parse, std::string("unexpected end of input reading ") + what);
  return token;
}

double parse_real(const std::string& token) {
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(token.c_str(), &end);
  if (end != token.c_str() + token.size() || errno == ERANGE) {
    throw Error(Errc::Parse, "not a real number: '" + token + "'");
  }
  return v;
}

long long parse_integer(const std::string& token) {
  char* end = nullptr;
  errno = 0;
  const long long v = std::strtoll(token.c_str(), &end, 10);
  if (end != token.c_str() + token.size() || errno == ERANGE) {
    throw Error(Errc::Parse, "not an integer: '" + token + "'");
  }
  return v;
}

std::size_t parse_dimension(std::istream& in, const char* what) {
  const long long v = parse_integer(next_token(in, what));
  if (v <= 0) throw Error(Errc::Parse, std::string(what) + " must be positive");
  return static_cast<std::size_t>(v);
}

void expect_end(std::istream& in) {
  std::string extra;
  if (in >> extra) throw Error(Errc::Parse, "trailing content: '" + extra + "'");
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::Io, "cannot open " + path.string());
  return in;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::Io, "cannot write " + path.string());
  return out;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw Error(Errc::Io, "write failed for " + path.string());
}

void write_row(std::ostream& out, std::span<const double> values) {
  for (std::size_t j = 0; j < values.size(); ++j) {
    if (j != 0) out << ' ';
    out << format_real(values[j]);
  }
  out << '\n';
}

}  // namespace

std::string format_real(double value, int digits) {
  if (std::isnan(value)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, value);
  return buf;
}

void write_sign_matrix(std::ostream& out, const gf2::SignMatrix& x) {
  out << x.rows() << ' ' << x.cols() << '\n';
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t j = 0; j < x.cols(); ++j) {
      if (j != 0) out << ' ';
      out << (x(i, j) > 0 ? "1" : "-1");
    }
    out << '\n';
  }
}

Matrix read_sign_matrix(std::istream& in) {
  const std::size_t k = parse_dimension(in, "row count");
  const std::size_t l = parse_dimension(in, "column count");
  Matrix x(k, l);
  for (double& v : x.values()) v = static_cast<double>(parse_integer(next_token(in, "entry")));
  expect_end(in);
  return x;
}

void write_matrix(std::ostream& out, const Matrix& a) {
  out << a.rows() << ' ' << a.cols() << '\n';
  for (std::size_t i = 0; i < a.rows(); ++i) write_row(out, a.row(i));
}

Matrix read_matrix(std::istream& in) {
  const std::size_t m = parse_dimension(in, "row count");
  const std::size_t n = parse_dimension(in, "column count");
  Matrix a(m, n);
  for (double& v : a.values()) v = parse_real(next_token(in, "entry"));
  expect_end(in);
  return a;
}

void write_frame(std::ostream& out, const Frame& f) { write_matrix(out, f.vectors()); }

Frame read_frame(std::istream& in, double unit_tol) { return Frame(read_matrix(in), unit_tol); }

void write_witness(std::ostream& out, const Witness& w) {
  out << w.dim() << ' ' << w.count() << '\n';
  out << format_real(w.theta) << '\n';
  write_row(out, w.t);
  for (std::size_t i = 0; i < w.dim(); ++i) write_row(out, w.u.row(i));
}

Witness read_witness(std::istream& in) {
  const std::size_t m = parse_dimension(in, "m");
  const std::size_t n = parse_dimension(in, "n");
  Witness w;
  w.theta = parse_real(next_token(in, "theta"));
  w.t.resize(n);
  for (double& v : w.t) v = parse_real(next_token(in, "t entry"));
  w.u = Matrix(m, n);
  for (double& v : w.u.values()) v = parse_real(next_token(in, "U entry"));
  expect_end(in);
  w.objective = objective_value(w.t, w.u);
  return w;
}

Matrix load_sign_matrix(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_sign_matrix(in);
}

void save_sign_matrix(const std::filesystem::path& path, const gf2::SignMatrix& x) {
  auto out = open_out(path);
  write_sign_matrix(out, x);
  finish(out, path);
}

Frame load_frame(const std::filesystem::path& path, double unit_tol) {
  auto in = open_in(path);
  return read_frame(in, unit_tol);
}

void save_frame(const std::filesystem::path& path, const Frame& f) {
  auto out = open_out(path);
  write_frame(out, f);
  finish(out, path);
}

Witness load_witness(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_witness(in);
}

void save_witness(const std::filesystem::path& path, const Witness& w) {
  auto out = open_out(path);
  write_witness(out, w);
  finish(out, path);
}

}  // namespace projconst::io
