#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ricci/graph.hpp"

namespace ricci {

// Single-source shortest paths; unreachable nodes hold +infinity.
std::vector<double> single_source_distances(const WeightedGraph& g, NodeIndex source);

// nullopt means Unreachable.
std::optional<double> shortest_distance(const WeightedGraph& g, NodeIndex u, NodeIndex v);
std::optional<double> shortest_distance(const WeightedGraph& g, const std::string& u, const std::string& v);

double edge_rho(const WeightedGraph& g, EdgeIndex e);

// Distances bound to one weight-vector snapshot. Reading after the graph's
// weights have been replaced throws StaleSnapshot. The all-pairs table is
// exactly symmetric; lazily computed rows are exact per source only.
class DistanceOracle {
 public:
  explicit DistanceOracle(const WeightedGraph& g, bool all_pairs = true);

  std::optional<double> distance(NodeIndex u, NodeIndex v) const;
  // +infinity when unreachable.
  double raw(NodeIndex u, NodeIndex v) const;
  std::span<const double> row(NodeIndex u) const;
  double rho(EdgeIndex e) const;

  const WeightedGraph& graph() const noexcept { return *g_; }
  std::uint64_t version() const noexcept { return version_; }

 private:
  void check_fresh() const;
  void ensure_row(NodeIndex u) const;

  const WeightedGraph* g_;
  std::uint64_t version_;
  std::size_t n_;
  mutable std::vector<double> table_;
  mutable std::vector<std::uint8_t> ready_;
};

}  // namespace ricci
