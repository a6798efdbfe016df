#include "ricci/graph.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <unordered_set>

#include "ricci/error.hpp"

namespace ricci {

namespace {

std::uint64_t next_version() {
  static std::atomic<std::uint64_t> counter{0};
  return ++counter;
}

std::uint64_t pair_key(NodeIndex u, NodeIndex v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint64_t>(v);
}

void check_weights(std::span<const double> weights, std::size_t m) {
  if (weights.size() != m) {
    throw Error(ErrorCode::InvalidConfig, "weight vector length " + std::to_string(weights.size()) +
                                              " does not match edge count " + std::to_string(m));
  }
  for (std::size_t e = 0; e < m; ++e) {
    if (!(weights[e] > 0.0)) {
      throw Error(ErrorCode::NonPositiveWeight, "edge " + std::to_string(e) + " has weight " +
                                                    std::to_string(weights[e]));
    }
  }
}

}  // namespace

// ============================================================================
// WeightedGraph
// ============================================================================

WeightedGraph::WeightedGraph() : topo_(make_topology({}, {})), version_(next_version()) {}

std::shared_ptr<const WeightedGraph::Topology> WeightedGraph::make_topology(
    std::vector<std::string> names, std::vector<Edge> edges) {
  auto topo = std::make_shared<Topology>();
  topo->names = std::move(names);
  topo->edges = std::move(edges);
  const std::size_t n = topo->names.size();
  topo->index.reserve(n);
  for (NodeIndex i = 0; i < n; ++i) topo->index.emplace(topo->names[i], i);

  std::vector<std::size_t> deg(n, 0);
  for (const Edge& e : topo->edges) {
    ++deg[e.u];
    ++deg[e.v];
  }
  topo->offsets.assign(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) topo->offsets[i + 1] = topo->offsets[i] + deg[i];
  topo->adjacency.resize(topo->offsets[n]);
  std::vector<std::size_t> fill(topo->offsets.begin(), topo->offsets.end() - 1);
  for (EdgeIndex e = 0; e < topo->edges.size(); ++e) {
    const Edge& ed = topo->edges[e];
    topo->adjacency[fill[ed.u]++] = {ed.v, e};
    topo->adjacency[fill[ed.v]++] = {ed.u, e};
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::sort(topo->adjacency.begin() + static_cast<std::ptrdiff_t>(topo->offsets[i]),
              topo->adjacency.begin() + static_cast<std::ptrdiff_t>(topo->offsets[i + 1]),
              [](const Adjacent& a, const Adjacent& b) { return a.node < b.node; });
  }
  return topo;
}

WeightedGraph WeightedGraph::build(std::span<const EdgeTriple> triples,
                                   std::span<const std::string> extra_nodes) {
  std::vector<std::string> names;
  std::unordered_map<std::string, NodeIndex> index;
  auto intern = [&](const std::string& name) {
    auto [it, inserted] = index.emplace(name, names.size());
    if (inserted) names.push_back(name);
    return it->second;
  };

  std::vector<Edge> edges;
  std::vector<double> weights;
  std::unordered_set<std::uint64_t> seen;
  edges.reserve(triples.size());
  weights.reserve(triples.size());
  for (std::size_t i = 0; i < triples.size(); ++i) {
    const EdgeTriple& t = triples[i];
    if (t.u == t.v) throw Error(ErrorCode::SelfLoop, "edge " + std::to_string(i) + " at node " + t.u);
    if (!(t.w > 0.0)) {
      throw Error(ErrorCode::NonPositiveWeight,
                  "edge " + std::to_string(i) + " (" + t.u + "," + t.v + ") has weight " + std::to_string(t.w));
    }
    const NodeIndex u = intern(t.u);
    const NodeIndex v = intern(t.v);
    if (!seen.insert(pair_key(u, v)).second) {
      throw Error(ErrorCode::DuplicateEdge, "edge " + std::to_string(i) + " (" + t.u + "," + t.v + ")");
    }
    edges.push_back({u, v});
    weights.push_back(t.w);
  }
  for (const std::string& name : extra_nodes) intern(name);

  WeightedGraph g;
  g.topo_ = make_topology(std::move(names), std::move(edges));
  g.weights_ = std::move(weights);
  g.version_ = next_version();
  return g;
}

WeightedGraph WeightedGraph::from_indexed(std::size_t n, std::span<const Edge> edges,
                                          std::span<const double> weights) {
  if (weights.size() != edges.size()) {
    throw Error(ErrorCode::InvalidConfig, "edge and weight counts differ");
  }
  std::unordered_set<std::uint64_t> seen;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    if (e.u >= n || e.v >= n) throw Error(ErrorCode::UnknownNode, "edge " + std::to_string(i));
    if (e.u == e.v) throw Error(ErrorCode::SelfLoop, "edge " + std::to_string(i));
    if (!seen.insert(pair_key(e.u, e.v)).second) {
      throw Error(ErrorCode::DuplicateEdge, "edge " + std::to_string(i));
    }
  }
  check_weights(weights, edges.size());
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) names[i] = std::to_string(i);

  WeightedGraph g;
  g.topo_ = make_topology(std::move(names), std::vector<Edge>(edges.begin(), edges.end()));
  g.weights_.assign(weights.begin(), weights.end());
  g.version_ = next_version();
  return g;
}

std::size_t WeightedGraph::num_nodes() const noexcept { return topo_->names.size(); }
std::size_t WeightedGraph::num_edges() const noexcept { return topo_->edges.size(); }

const Edge& WeightedGraph::edge(EdgeIndex e) const {
  if (e >= topo_->edges.size()) throw Error(ErrorCode::BadEdgeIndex, std::to_string(e));
  return topo_->edges[e];
}

std::span<const Edge> WeightedGraph::edges() const noexcept { return topo_->edges; }

std::span<const Adjacent> WeightedGraph::neighbors(NodeIndex x) const {
  if (x >= num_nodes()) throw Error(ErrorCode::UnknownNode, std::to_string(x));
  return std::span<const Adjacent>(topo_->adjacency)
      .subspan(topo_->offsets[x], topo_->offsets[x + 1] - topo_->offsets[x]);
}

std::size_t WeightedGraph::degree(NodeIndex x) const { return neighbors(x).size(); }

double WeightedGraph::weight(EdgeIndex e) const {
  if (e >= weights_.size()) throw Error(ErrorCode::BadEdgeIndex, std::to_string(e));
  return weights_[e];
}

const std::string& WeightedGraph::node_name(NodeIndex x) const {
  if (x >= num_nodes()) throw Error(ErrorCode::UnknownNode, std::to_string(x));
  return topo_->names[x];
}

std::optional<NodeIndex> WeightedGraph::find_node(const std::string& name) const {
  auto it = topo_->index.find(name);
  if (it == topo_->index.end()) return std::nullopt;
  return it->second;
}

NodeIndex WeightedGraph::node_index(const std::string& name) const {
  auto idx = find_node(name);
  if (!idx) throw Error(ErrorCode::UnknownNode, name);
  return *idx;
}

std::optional<EdgeIndex> WeightedGraph::find_edge(NodeIndex u, NodeIndex v) const {
  for (const Adjacent& a : neighbors(u)) {
    if (a.node == v) return a.edge;
  }
  return std::nullopt;
}

void WeightedGraph::set_weights(std::vector<double> weights) {
  check_weights(weights, num_edges());
  weights_ = std::move(weights);
  version_ = next_version();
}

WeightedGraph WeightedGraph::with_weights(std::vector<double> weights) const {
  WeightedGraph g = *this;
  g.set_weights(std::move(weights));
  return g;
}

bool WeightedGraph::same_topology(const WeightedGraph& other) const noexcept {
  if (topo_ == other.topo_) return true;
  if (num_nodes() != other.num_nodes() || num_edges() != other.num_edges()) return false;
  for (std::size_t e = 0; e < num_edges(); ++e) {
    if (topo_->edges[e].u != other.topo_->edges[e].u || topo_->edges[e].v != other.topo_->edges[e].v) {
      return false;
    }
  }
  return true;
}

// ============================================================================
// Partition
// ============================================================================

Partition::Partition(std::span<const int> raw_labels) {
  std::unordered_map<int, int> remap;
  labels_.resize(raw_labels.size());
  for (std::size_t i = 0; i < raw_labels.size(); ++i) {
    auto [it, inserted] = remap.emplace(raw_labels[i], static_cast<int>(remap.size()));
    labels_[i] = it->second;
  }
  k_ = remap.size();
}

std::vector<std::size_t> Partition::community_sizes() const {
  std::vector<std::size_t> sizes(k_, 0);
  for (int c : labels_) ++sizes[static_cast<std::size_t>(c)];
  return sizes;
}

// ============================================================================
// Components
// ============================================================================

namespace {

struct DisjointSet {
  std::vector<std::size_t> parent;
  explicit DisjointSet(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) parent[b] = a; else parent[a] = b;
  }
};

}  // namespace

Partition connected_components(const WeightedGraph& g) {
  std::vector<std::uint8_t> all(g.num_edges(), 1);
  return connected_components(g, all);
}

Partition connected_components(const WeightedGraph& g, std::span<const std::uint8_t> active) {
  if (active.size() != g.num_edges()) {
    throw Error(ErrorCode::InvalidConfig, "edge mask length does not match edge count");
  }
  DisjointSet ds(g.num_nodes());
  const auto edges = g.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (active[e]) ds.unite(edges[e].u, edges[e].v);
  }
  std::vector<int> roots(g.num_nodes());
  for (std::size_t i = 0; i < roots.size(); ++i) roots[i] = static_cast<int>(ds.find(i));
  return Partition(roots);
}

}  // namespace ricci
