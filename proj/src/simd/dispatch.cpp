#include <cstdlib>
#include <string_view>

#include "ricci/simd/kernels.hpp"

namespace ricci::simd {

#if defined(RICCI_HAVE_AVX2)
namespace detail {
const KernelTable& avx2_table() noexcept;
}
#endif

const KernelTable* avx2_kernels() noexcept {
#if defined(RICCI_HAVE_AVX2)
  static const bool supported = __builtin_cpu_supports("avx2");
  if (supported) return &detail::avx2_table();
#endif
  return nullptr;
}

namespace {

const KernelTable& select_kernels() noexcept {
  const char* env = std::getenv("RICCI_SIMD");
  const std::string_view choice = env ? env : "auto";
  if (choice == "scalar") return scalar_kernels();
  if (const KernelTable* avx2 = avx2_kernels()) return *avx2;
  return scalar_kernels();
}

}  // namespace

const KernelTable& active_kernels() noexcept {
  static const KernelTable& table = select_kernels();
  return table;
}

}  // namespace ricci::simd
