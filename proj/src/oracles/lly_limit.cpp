#include <array>
#include <vector>

#include "ricci/curvature.hpp"
#include "ricci/error.hpp"
#include "ricci/oracles.hpp"

namespace ricci::oracles {

double lly_limit_oracle(const WeightedGraph& g, EdgeIndex e, std::span<const double> alphas) {
  if (alphas.empty()) throw Error(ErrorCode::InvalidConfig, "no alpha values");
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    if (!(alphas[i] < 1.0) || (i > 0 && !(alphas[i] > alphas[i - 1]))) {
      throw Error(ErrorCode::InvalidConfig, "alphas must increase strictly toward 1");
    }
  }
  DistanceOracle dist(g, false);
  std::vector<double> h(alphas.size());
  std::vector<double> p(alphas.size());
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    h[i] = 1.0 - alphas[i];
    p[i] = ollivier_curvature(g, dist, e, alphas[i], LpBackend::DenseSimplex) / h[i];
  }
  // Neville's tableau evaluated at h = 0.
  const std::size_t n = p.size();
  for (std::size_t k = 1; k < n; ++k) {
    for (std::size_t i = 0; i + k < n; ++i) {
      p[i] = (h[i] * p[i + 1] - h[i + k] * p[i]) / (h[i] - h[i + k]);
    }
  }
  return p[0];
}

double lly_limit_oracle(const WeightedGraph& g, EdgeIndex e) {
  static constexpr std::array<double, 3> kAlphas{0.9, 0.99, 0.999};
  return lly_limit_oracle(g, e, kAlphas);
}

}  // namespace ricci::oracles
