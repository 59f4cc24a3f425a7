#include <cstdlib>
#include <string_view>

#include "qnf/kernels.hpp"

namespace qnf::kernels {

std::string_view to_string(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    case Isa::Neon: return "neon";
  }
  return "unknown";
}

const KernelTable& scalar_table() noexcept {
  static const KernelTable table{Isa::Scalar, &scalar::dotu, &scalar::dotc, &scalar::axpy};
  return table;
}

bool isa_available(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar: return true;
    case Isa::Avx2:
#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
      return avx2_table() != nullptr && __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
    case Isa::Neon:
      // Advanced SIMD is mandatory on AArch64.
      return neon_table() != nullptr;
  }
  return false;
}

static const KernelTable& select() noexcept {
  if (const char* env = std::getenv("QNF_SIMD"); env != nullptr && std::string_view(env) == "scalar") {
    return scalar_table();
  }
  if (isa_available(Isa::Avx2)) return *avx2_table();
  if (isa_available(Isa::Neon)) return *neon_table();
  return scalar_table();
}

const KernelTable& active() noexcept {
  static const KernelTable& table = select();
  return table;
}

}  // namespace qnf::kernels
