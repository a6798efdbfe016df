#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace ricci {

using NodeIndex = std::size_t;
using EdgeIndex = std::size_t;

struct Edge {
  NodeIndex u = 0;
  NodeIndex v = 0;
};

struct EdgeTriple {
  std::string u;
  std::string v;
  double w = 1.0;
};

struct Adjacent {
  NodeIndex node;
  EdgeIndex edge;
};

// ============================================================================
// WeightedGraph
// ============================================================================

class WeightedGraph {
 public:
  WeightedGraph();

  // Nodes are numbered in order of first appearance; extra_nodes (possibly
  // isolated) are appended after the edge endpoints.
  static WeightedGraph build(std::span<const EdgeTriple> edges,
                             std::span<const std::string> extra_nodes = {});

  // Nodes are 0..n-1 and are named by their decimal index.
  static WeightedGraph from_indexed(std::size_t n, std::span<const Edge> edges,
                                    std::span<const double> weights);

  std::size_t num_nodes() const noexcept;
  std::size_t num_edges() const noexcept;

  const Edge& edge(EdgeIndex e) const;
  std::span<const Edge> edges() const noexcept;
  std::span<const Adjacent> neighbors(NodeIndex x) const;
  std::size_t degree(NodeIndex x) const;

  double weight(EdgeIndex e) const;
  std::span<const double> weights() const noexcept { return weights_; }

  const std::string& node_name(NodeIndex x) const;
  std::optional<NodeIndex> find_node(const std::string& name) const;
  NodeIndex node_index(const std::string& name) const;
  std::optional<EdgeIndex> find_edge(NodeIndex u, NodeIndex v) const;

  // Each distinct weight vector gets a fresh version tag.
  std::uint64_t version() const noexcept { return version_; }

  void set_weights(std::vector<double> weights);
  WeightedGraph with_weights(std::vector<double> weights) const;

  bool same_topology(const WeightedGraph& other) const noexcept;

 private:
  struct Topology {
    std::vector<std::string> names;
    std::unordered_map<std::string, NodeIndex> index;
    std::vector<Edge> edges;
    std::vector<std::size_t> offsets;
    std::vector<Adjacent> adjacency;
  };

  static std::shared_ptr<const Topology> make_topology(std::vector<std::string> names,
                                                       std::vector<Edge> edges);

  std::shared_ptr<const Topology> topo_;
  std::vector<double> weights_;
  std::uint64_t version_ = 0;
};

// ============================================================================
// Partition
// ============================================================================

class Partition {
 public:
  Partition() = default;
  explicit Partition(std::span<const int> raw_labels);
  explicit Partition(const std::vector<int>& raw_labels)
      : Partition(std::span<const int>(raw_labels)) {}

  std::size_t size() const noexcept { return labels_.size(); }
  std::size_t num_communities() const noexcept { return k_; }
  int operator[](NodeIndex x) const { return labels_[x]; }
  std::span<const int> labels() const noexcept { return labels_; }
  std::vector<std::size_t> community_sizes() const;

  bool operator==(const Partition& other) const = default;

 private:
  std::vector<int> labels_;
  std::size_t k_ = 0;
};

Partition connected_components(const WeightedGraph& g);
Partition connected_components(const WeightedGraph& g, std::span<const std::uint8_t> active);

}  // namespace ricci
