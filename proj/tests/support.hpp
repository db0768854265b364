#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "projconst/kernels.hpp"
#include "projconst/matrix.hpp"
#include "projconst/rng.hpp"

namespace testsupport {

inline projconst::Matrix gaussian(std::size_t r, std::size_t c, std::uint64_t seed) {
  projconst::SplitMix64 rng(seed);
  projconst::NormalSampler normal;
  projconst::Matrix a(r, c);
  for (double& v : a.values()) v = normal(rng);
  return a;
}

inline projconst::Matrix random_symmetric(std::size_t n, std::uint64_t seed) {
  const projconst::Matrix g = gaussian(n, n, seed);
  return 0.5 * (g + g.transpose());
}

inline std::vector<double> gaussian_vector(std::size_t n, std::uint64_t seed) {
  projconst::SplitMix64 rng(seed);
  projconst::NormalSampler normal;
  std::vector<double> v(n);
  for (double& x : v) x = normal(rng);
  return v;
}

// Restores the kernel table on scope exit.
class IsaGuard {
 public:
  explicit IsaGuard(projconst::simd::Isa isa) : saved_(projconst::simd::active_isa()) {
    ok_ = projconst::simd::set_isa(isa);
  }
  ~IsaGuard() { projconst::simd::set_isa(saved_); }
  bool ok() const { return ok_; }

 private:
  projconst::simd::Isa saved_;
  bool ok_ = false;
};

}  // namespace testsupport

namespace testsupport {

// Three unit vectors at 120 degrees in R^2, as columns.
inline projconst::Matrix mercedes_benz() {
  const double h = std::sqrt(3.0) / 2;
  return projconst::Matrix{{1, -0.5, -0.5}, {0, h, -h}};
}

// Columns of the normalized Sylvester Hadamard matrix of order 4.
inline projconst::Matrix hadamard4() {
  return 0.5 * projconst::Matrix{{1, 1, 1, 1}, {1, -1, 1, -1}, {1, 1, -1, -1}, {1, -1, -1, 1}};
}

}  // namespace testsupport
