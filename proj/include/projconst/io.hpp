#pragma once

// Plain-text file formats.
//
//   sign matrix:  "k l" then k lines of l tokens from {-1, 1}
//   frame:        "m n" then m lines of n reals
//   witness:      "m n", then θ (or "nan"), then the n entries of t on one
//                 line, then the m rows of U
//
// Reals are written with 17 significant digits.

#include <filesystem>
#include <iosfwd>
#include <string>

#include "projconst/frame.hpp"
#include "projconst/gf2.hpp"
#include "projconst/matrix.hpp"
#include "projconst/witness.hpp"

namespace projconst::io {

std::string format_real(double value, int digits = 17);

void write_sign_matrix(std::ostream& out, const gf2::SignMatrix& x);
/// Entries are read as integers so that a malformed matrix (e.g. a 0 entry)
/// still loads and can be reported on.
Matrix read_sign_matrix(std::istream& in);

void write_matrix(std::ostream& out, const Matrix& a);
Matrix read_matrix(std::istream& in);

void write_frame(std::ostream& out, const Frame& f);
Frame read_frame(std::istream& in, double unit_tol = kFrameTol);

void write_witness(std::ostream& out, const Witness& w);
Witness read_witness(std::istream& in);

/// File wrappers; I/O failures throw Error(Errc::Io).
Matrix load_sign_matrix(const std::filesystem::path& path);
void save_sign_matrix(const std::filesystem::path& path, const gf2::SignMatrix& x);
Frame load_frame(const std::filesystem::path& path, double unit_tol = kFrameTol);
void save_frame(const std::filesystem::path& path, const Frame& f);
Witness load_witness(const std::filesystem::path& path);
void save_witness(const std::filesystem::path& path, const Witness& w);

}  // namespace projconst::io
