#include "ricci/simd/kernels.hpp"

namespace ricci::simd {

namespace {

void sub_scaled_scalar(double* y, const double* x, double a, std::size_t n) {
  for (std::size_t j = 0; j < n; ++j) {
    const double t = a * x[j];
    y[j] = y[j] - t;
  }
}

std::size_t argmin_reduced_scalar(const double* cost, const double* pot, double offset, std::size_t n,
                                  double* min_out) {
  std::size_t best = 0;
  double best_val = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double r = (cost[j] - pot[j]) - offset;
    if (j == 0 || r < best_val) {
      best_val = r;
      best = j;
    }
  }
  if (min_out) *min_out = best_val;
  return best;
}

std::size_t first_below_scalar(const double* x, std::size_t n, double threshold) {
  for (std::size_t j = 0; j < n; ++j) {
    if (x[j] < threshold) return j;
  }
  return n;
}

}  // namespace

const KernelTable& scalar_kernels() noexcept {
  static const KernelTable table{Isa::Scalar, "scalar", &sub_scaled_scalar, &argmin_reduced_scalar,
                                 &first_below_scalar};
  return table;
}

}  // namespace ricci::simd
