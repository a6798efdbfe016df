#include <immintrin.h>

#include "ricci/simd/kernels.hpp"

namespace ricci::simd {

namespace detail {

void sub_scaled_avx2(double* y, const double* x, double a, std::size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    const __m256d t = _mm256_mul_pd(va, _mm256_loadu_pd(x + j));
    _mm256_storeu_pd(y + j, _mm256_sub_pd(_mm256_loadu_pd(y + j), t));
  }
  for (; j < n; ++j) {
    const double t = a * x[j];
    y[j] = y[j] - t;
  }
}

std::size_t argmin_reduced_avx2(const double* cost, const double* pot, double offset, std::size_t n,
                                double* min_out) {
  if (n < 8) {
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

  const __m256d voff = _mm256_set1_pd(offset);
  __m256d best_val = _mm256_sub_pd(_mm256_sub_pd(_mm256_loadu_pd(cost), _mm256_loadu_pd(pot)), voff);
  __m256d best_idx = _mm256_setr_pd(0.0, 1.0, 2.0, 3.0);
  __m256d idx = best_idx;
  const __m256d four = _mm256_set1_pd(4.0);
  std::size_t j = 4;
  for (; j + 4 <= n; j += 4) {
    idx = _mm256_add_pd(idx, four);
    const __m256d r = _mm256_sub_pd(_mm256_sub_pd(_mm256_loadu_pd(cost + j), _mm256_loadu_pd(pot + j)), voff);
    const __m256d lt = _mm256_cmp_pd(r, best_val, _CMP_LT_OQ);
    best_val = _mm256_blendv_pd(best_val, r, lt);
    best_idx = _mm256_blendv_pd(best_idx, idx, lt);
  }

  alignas(32) double vals[4];
  alignas(32) double idxs[4];
  _mm256_store_pd(vals, best_val);
  _mm256_store_pd(idxs, best_idx);
  double bv = vals[0];
  std::size_t bi = static_cast<std::size_t>(idxs[0]);
  for (int lane = 1; lane < 4; ++lane) {
    const std::size_t li = static_cast<std::size_t>(idxs[lane]);
    if (vals[lane] < bv || (vals[lane] == bv && li < bi)) {
      bv = vals[lane];
      bi = li;
    }
  }
  for (; j < n; ++j) {
    const double r = (cost[j] - pot[j]) - offset;
    if (r < bv) {
      bv = r;
      bi = j;
    }
  }
  if (min_out) *min_out = bv;
  return bi;
}

std::size_t first_below_avx2(const double* x, std::size_t n, double threshold) {
  const __m256d vt = _mm256_set1_pd(threshold);
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    const int mask = _mm256_movemask_pd(_mm256_cmp_pd(_mm256_loadu_pd(x + j), vt, _CMP_LT_OQ));
    if (mask != 0) return j + static_cast<std::size_t>(__builtin_ctz(static_cast<unsigned>(mask)));
  }
  for (; j < n; ++j) {
    if (x[j] < threshold) return j;
  }
  return n;
}

const KernelTable& avx2_table() noexcept {
  static const KernelTable table{Isa::Avx2, "avx2", &sub_scaled_avx2, &argmin_reduced_avx2, &first_below_avx2};
  return table;
}

}  // namespace detail

}  // namespace ricci::simd
