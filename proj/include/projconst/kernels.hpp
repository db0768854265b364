#pragma once

// Inner-loop kernels with a scalar reference table and SIMD variants chosen
// once at startup from the running CPU's feature set.

#include <cstddef>
#include <span>
#include <string_view>

namespace projconst::simd {

enum class Isa { Scalar, Avx2 };

struct KernelTable {
  Isa isa;
  double (*dot)(const double* x, const double* y, std::size_t n);
  // y += alpha * x
  void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
  // (x, y) <- (c*x - s*y, s*x + c*y)
  void (*rot)(double* x, double* y, std::size_t n, double c, double s);
  void (*scal)(double alpha, double* x, std::size_t n);
};

const KernelTable& scalar_kernels() noexcept;
#if defined(PROJCONST_HAVE_AVX2)
const KernelTable& avx2_kernels() noexcept;
#endif

bool isa_supported(Isa isa) noexcept;
std::string_view isa_name(Isa isa) noexcept;

/// Table in use. Starts at the best supported ISA unless PROJCONST_ISA=scalar.
const KernelTable& active() noexcept;
Isa active_isa() noexcept;
/// Returns false (and changes nothing) when the ISA is not supported here.
bool set_isa(Isa isa) noexcept;
const KernelTable& table_for(Isa isa) noexcept;

inline double dot(std::span<const double> x, std::span<const double> y) noexcept {
  return active().dot(x.data(), y.data(), x.size());
}
inline void axpy(double alpha, std::span<const double> x, std::span<double> y) noexcept {
  active().axpy(alpha, x.data(), y.data(), x.size());
}
inline void rot(std::span<double> x, std::span<double> y, double c, double s) noexcept {
  active().rot(x.data(), y.data(), x.size(), c, s);
}
inline void scal(double alpha, std::span<double> x) noexcept {
  active().scal(alpha, x.data(), x.size());
}

}  // namespace projconst::simd
