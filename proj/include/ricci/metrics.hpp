#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ricci/graph.hpp"

namespace ricci {

struct ContingencyTable {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::size_t> counts;  // rows x cols
  std::vector<std::size_t> a;       // row marginals
  std::vector<std::size_t> b;       // column marginals
  std::size_t n = 0;

  static ContingencyTable from(const Partition& p, const Partition& q);
  std::size_t at(std::size_t i, std::size_t j) const { return counts[i * cols + j]; }
};

double ari(const Partition& p, const Partition& q);
double nmi(const Partition& p, const Partition& q);

// Unweighted modularity; the optional mask restricts the edge set.
double modularity(const WeightedGraph& g, const Partition& p, double gamma = 1.0);
double modularity(const WeightedGraph& g, const Partition& p, double gamma, std::span<const std::uint8_t> active);

}  // namespace ricci
