#include "ricci/distance.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>
#include <utility>

#include "ricci/error.hpp"

namespace ricci {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

using HeapItem = std::pair<double, NodeIndex>;
using MinHeap = std::priority_queue<HeapItem, std::vector<HeapItem>, std::greater<>>;

void dijkstra(const WeightedGraph& g, NodeIndex source, double* dist, std::optional<NodeIndex> target) {
  const std::size_t n = g.num_nodes();
  const auto weights = g.weights();
  std::fill(dist, dist + n, kInf);
  dist[source] = 0.0;
  MinHeap heap;
  heap.emplace(0.0, source);
  while (!heap.empty()) {
    auto [d, x] = heap.top();
    heap.pop();
    if (d > dist[x]) continue;
    if (target && x == *target) return;
    for (const Adjacent& a : g.neighbors(x)) {
      const double nd = d + weights[a.edge];
      if (nd < dist[a.node]) {
        dist[a.node] = nd;
        heap.emplace(nd, a.node);
      }
    }
  }
}

void check_node(const WeightedGraph& g, NodeIndex x) {
  if (x >= g.num_nodes()) throw Error(ErrorCode::UnknownNode, std::to_string(x));
}

}  // namespace

std::vector<double> single_source_distances(const WeightedGraph& g, NodeIndex source) {
  check_node(g, source);
  std::vector<double> dist(g.num_nodes());
  dijkstra(g, source, dist.data(), std::nullopt);
  return dist;
}

std::optional<double> shortest_distance(const WeightedGraph& g, NodeIndex u, NodeIndex v) {
  check_node(g, u);
  check_node(g, v);
  std::vector<double> dist(g.num_nodes());
  dijkstra(g, u, dist.data(), v);
  if (dist[v] == kInf) return std::nullopt;
  return dist[v];
}

std::optional<double> shortest_distance(const WeightedGraph& g, const std::string& u, const std::string& v) {
  return shortest_distance(g, g.node_index(u), g.node_index(v));
}

double edge_rho(const WeightedGraph& g, EdgeIndex e) {
  const Edge& ed = g.edge(e);
  return *shortest_distance(g, ed.u, ed.v);
}

// ============================================================================
// DistanceOracle
// ============================================================================

DistanceOracle::DistanceOracle(const WeightedGraph& g, bool all_pairs)
    : g_(&g), version_(g.version()), n_(g.num_nodes()), table_(n_ * n_), ready_(n_, 0) {
  if (all_pairs) {
    for (NodeIndex u = 0; u < n_; ++u) ensure_row(u);
    for (NodeIndex u = 0; u < n_; ++u) {
      for (NodeIndex v = u + 1; v < n_; ++v) {
        const double d = std::min(table_[u * n_ + v], table_[v * n_ + u]);
        table_[u * n_ + v] = table_[v * n_ + u] = d;
      }
    }
  }
}

void DistanceOracle::check_fresh() const {
  if (g_->version() != version_) {
    throw Error(ErrorCode::StaleSnapshot, "distance read after the weight vector changed");
  }
}

void DistanceOracle::ensure_row(NodeIndex u) const {
  if (ready_[u]) return;
  dijkstra(*g_, u, table_.data() + u * n_, std::nullopt);
  ready_[u] = 1;
}

double DistanceOracle::raw(NodeIndex u, NodeIndex v) const {
  check_fresh();
  if (u >= n_ || v >= n_) throw Error(ErrorCode::UnknownNode, std::to_string(u >= n_ ? u : v));
  ensure_row(u);
  return table_[u * n_ + v];
}

std::optional<double> DistanceOracle::distance(NodeIndex u, NodeIndex v) const {
  const double d = raw(u, v);
  if (d == kInf) return std::nullopt;
  return d;
}

std::span<const double> DistanceOracle::row(NodeIndex u) const {
  check_fresh();
  if (u >= n_) throw Error(ErrorCode::UnknownNode, std::to_string(u));
  ensure_row(u);
  return std::span<const double>(table_).subspan(u * n_, n_);
}

double DistanceOracle::rho(EdgeIndex e) const {
  const Edge& ed = g_->edge(e);
  return raw(ed.u, ed.v);
}

}  // namespace ricci
