#pragma once

#include <cstddef>

namespace ricci::simd {

enum class Isa { Scalar, Avx2 };

// Every variant produces bit-identical results: no fused multiply-add and the
// same association order as the scalar reference.
struct KernelTable {
  Isa isa;
  const char* name;
  // y[j] -= a * x[j]
  void (*sub_scaled)(double* y, const double* x, double a, std::size_t n);
  // argmin_j (cost[j] - pot[j]) - offset; first index on ties; n == 0 gives 0.
  std::size_t (*argmin_reduced)(const double* cost, const double* pot, double offset, std::size_t n,
                                double* min_out);
  // First j with x[j] < threshold, or n.
  std::size_t (*first_below)(const double* x, std::size_t n, double threshold);
};

const KernelTable& scalar_kernels() noexcept;
// nullptr when the variant was not compiled in or the CPU lacks support.
const KernelTable* avx2_kernels() noexcept;

// Chosen once: RICCI_SIMD=scalar|avx2|auto (default auto).
const KernelTable& active_kernels() noexcept;

}  // namespace ricci::simd
