#include <atomic>
#include <cstdlib>
#include <string_view>

#include "projconst/kernels.hpp"

namespace projconst::simd {
namespace {

bool cpu_has_avx2() noexcept {
#if defined(PROJCONST_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const KernelTable* initial_table() noexcept {
  if (const char* forced = std::getenv("PROJCONST_ISA");
      forced != nullptr && std::string_view(forced) == "scalar") {
    return &scalar_kernels();
  }
#if defined(PROJCONST_HAVE_AVX2)
  if (cpu_has_avx2()) return &avx2_kernels();
#endif
  return &scalar_kernels();
}

std::atomic<const KernelTable*>& current() noexcept {
  static std::atomic<const KernelTable*> table{initial_table()};
  return table;
}

}  // namespace

bool isa_supported(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
      return cpu_has_avx2();
  }
  return false;
}

std::string_view isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar:
      return "scalar";
    case Isa::Avx2:
      return "avx2";
  }
  return "unknown";
}

const KernelTable& table_for(Isa isa) noexcept {
#if defined(PROJCONST_HAVE_AVX2)
  if (isa == Isa::Avx2 && cpu_has_avx2()) return avx2_kernels();
#endif
  (void)isa;
  return scalar_kernels();
}

const KernelTable& active() noexcept { return *current().load(std::memory_order_relaxed); }

Isa active_isa() noexcept { return active().isa; }

bool set_isa(Isa isa) noexcept {
  if (!isa_supported(isa)) return false;
  current().store(&table_for(isa), std::memory_order_relaxed);
  return true;
}

}  // namespace projconst::simd
