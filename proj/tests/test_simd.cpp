#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include <doctest.h>

#include "ricci/simd/kernels.hpp"

using namespace ricci::simd;

namespace {

std::vector<double> random_vector(std::mt19937_64& rng, std::size_t n, bool coarse) {
  std::uniform_real_distribution<double> d(-5.0, 5.0);
  std::uniform_int_distribution<int> small(-3, 3);
  std::vector<double> v(n);
  for (double& x : v) x = coarse ? static_cast<double>(small(rng)) : d(rng);
  return v;
}

}  // namespace

TEST_CASE("simd: scalar kernels match plain loops") {
  const KernelTable& k = scalar_kernels();
  std::mt19937_64 rng(3);
  for (std::size_t n = 0; n < 40; ++n) {
    auto y = random_vector(rng, n, false);
    const auto x = random_vector(rng, n, false);
    auto expect = y;
    for (std::size_t j = 0; j < n; ++j) expect[j] -= 0.75 * x[j];
    k.sub_scaled(y.data(), x.data(), 0.75, n);
    CHECK(y == expect);

    const auto cost = random_vector(rng, n, true);
    const auto pot = random_vector(rng, n, true);
    double best = 0.0;
    const std::size_t j = k.argmin_reduced(cost.data(), pot.data(), 0.5, n, &best);
    if (n == 0) {
      CHECK(j == 0);
      continue;
    }
    std::size_t ej = 0;
    for (std::size_t t = 1; t < n; ++t) {
      if ((cost[t] - pot[t]) - 0.5 < (cost[ej] - pot[ej]) - 0.5) ej = t;
    }
    CHECK(j == ej);
    CHECK(best == (cost[ej] - pot[ej]) - 0.5);

    const std::size_t f = k.first_below(cost.data(), n, 0.0);
    std::size_t ef = n;
    for (std::size_t t = 0; t < n; ++t) {
      if (cost[t] < 0.0) {
        ef = t;
        break;
      }
    }
    CHECK(f == ef);
  }
}

TEST_CASE("simd: avx2 variants are bit-identical to scalar") {
  const KernelTable* avx = avx2_kernels();
  if (avx == nullptr) {
    MESSAGE("AVX2 variant unavailable on this host");
    return;
  }
  const KernelTable& s = scalar_kernels();
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t n = static_cast<std::size_t>(trial % 75);
    const bool coarse = trial % 3 == 0;
    auto y1 = random_vector(rng, n, coarse);
    auto y2 = y1;
    const auto x = random_vector(rng, n, coarse);
    const double a = std::uniform_real_distribution<double>(-2.0, 2.0)(rng);
    s.sub_scaled(y1.data(), x.data(), a, n);
    avx->sub_scaled(y2.data(), x.data(), a, n);
    REQUIRE(y1 == y2);

    const auto cost = random_vector(rng, n, coarse);
    const auto pot = random_vector(rng, n, coarse);
    double m1 = 0.0;
    double m2 = 0.0;
    const double off = coarse ? 1.0 : 0.3;
    REQUIRE(s.argmin_reduced(cost.data(), pot.data(), off, n, &m1) ==
            avx->argmin_reduced(cost.data(), pot.data(), off, n, &m2));
    if (n > 0) REQUIRE(m1 == m2);

    const double th = coarse ? -2.0 : -4.5;
    REQUIRE(s.first_below(cost.data(), n, th) == avx->first_below(cost.data(), n, th));
  }
}

TEST_CASE("simd: ties resolve to the first index") {
  const std::vector<double> cost{3.0, 1.0, 2.0, 1.0, 1.0, 0.0, 1.0, 0.0, 0.0};
  const std::vector<double> pot(cost.size(), 0.0);
  double best = 0.0;
  CHECK(scalar_kernels().argmin_reduced(cost.data(), pot.data(), 0.0, cost.size(), &best) == 5);
  if (const KernelTable* avx = avx2_kernels()) {
    CHECK(avx->argmin_reduced(cost.data(), pot.data(), 0.0, cost.size(), &best) == 5);
  }
}

TEST_CASE("simd: active table is one of the variants") {
  const KernelTable& k = active_kernels();
  CHECK((k.isa == Isa::Scalar || k.isa == Isa::Avx2));
}
