#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "ricci/graph.hpp"
#include "ricci/lp/transport.hpp"

namespace ricci::testing {

inline WeightedGraph make_graph(std::size_t n, const std::vector<std::pair<int, int>>& pairs,
                                std::vector<double> weights = {}) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (const auto& [u, v] : pairs) edges.push_back({static_cast<NodeIndex>(u), static_cast<NodeIndex>(v)});
  if (weights.empty()) weights.assign(edges.size(), 1.0);
  return WeightedGraph::from_indexed(n, edges, weights);
}

inline WeightedGraph single_edge(double w = 1.0) { return make_graph(2, {{0, 1}}, {w}); }

inline WeightedGraph triangle(double wxy = 1.0, double wxz = 1.0, double wzy = 1.0) {
  // x=0, y=1, z=2
  return make_graph(3, {{0, 1}, {0, 2}, {2, 1}}, {wxy, wxz, wzy});
}

inline WeightedGraph cycle(std::size_t n) {
  std::vector<std::pair<int, int>> e;
  for (std::size_t i = 0; i < n; ++i) e.emplace_back(static_cast<int>(i), static_cast<int>((i + 1) % n));
  return make_graph(n, e);
}

inline WeightedGraph complete(std::size_t n) {
  std::vector<std::pair<int, int>> e;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) e.emplace_back(static_cast<int>(i), static_cast<int>(j));
  }
  return make_graph(n, e);
}

// ============================================================================
// Exhaustive small graphs
// ============================================================================

namespace detail {

// Graphs on at most 11 nodes as adjacency bitmasks.
using AdjacencyMasks = std::vector<std::uint16_t>;

inline bool is_connected(const AdjacencyMasks& adj) {
  const std::size_t n = adj.size();
  if (n == 0) return false;
  std::uint32_t seen = 1u;
  std::uint32_t frontier = 1u;
  while (frontier) {
    std::uint32_t next = 0;
    for (std::size_t x = 0; x < n; ++x) {
      if (frontier >> x & 1u) next |= adj[x];
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == (1u << n) - 1u;
}

// Upper-triangle code of the graph with node order[i] placed at position i.
inline std::uint64_t encode(const AdjacencyMasks& adj, const std::vector<int>& order) {
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      code = code << 1 | (adj[order[i]] >> order[j] & 1u);
    }
  }
  return code;
}

// Colour refinement followed by exhaustive search over orders that respect
// the refined colour classes; the maximum code is a complete invariant.
inline std::uint64_t canonical_code(const AdjacencyMasks& adj) {
  const std::size_t n = adj.size();
  std::vector<int> colour(n, 0);
  std::size_t classes = 1;
  while (true) {
    std::vector<std::pair<std::vector<int>, std::size_t>> sig(n);
    for (std::size_t x = 0; x < n; ++x) {
      std::vector<int> key{colour[x]};
      std::vector<int> around;
      for (std::size_t y = 0; y < n; ++y) {
        if (adj[x] >> y & 1u) around.push_back(colour[y]);
      }
      std::sort(around.begin(), around.end());
      key.insert(key.end(), around.begin(), around.end());
      sig[x] = {std::move(key), x};
    }
    std::vector<std::vector<int>> keys;
    for (const auto& [k, x] : sig) keys.push_back(k);
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    for (std::size_t x = 0; x < n; ++x) {
      colour[x] = static_cast<int>(std::lower_bound(keys.begin(), keys.end(), sig[x].first) - keys.begin());
    }
    if (keys.size() == classes) break;
    classes = keys.size();
  }
  std::vector<std::vector<int>> cells(classes);
  for (std::size_t x = 0; x < n; ++x) cells[colour[x]].push_back(static_cast<int>(x));
  std::uint64_t best = 0;
  std::vector<int> order;
  auto rec = [&](auto&& self, std::size_t cell) -> void {
    if (cell == cells.size()) {
      best = std::max(best, encode(adj, order));
      return;
    }
    std::vector<int> members = cells[cell];
    do {
      order.insert(order.end(), members.begin(), members.end());
      self(self, cell + 1);
      order.resize(order.size() - members.size());
    } while (std::next_permutation(members.begin(), members.end()));
  };
  rec(rec, 0);
  return best;
}

// One representative per isomorphism class of graphs on n nodes, built by
// attaching a new node to every class on n - 1 nodes in every possible way.
inline std::vector<AdjacencyMasks> all_graphs(std::size_t n) {
  std::vector<AdjacencyMasks> level{AdjacencyMasks(1, 0)};
  for (std::size_t k = 2; k <= n; ++k) {
    std::set<std::uint64_t> seen;
    std::vector<AdjacencyMasks> next;
    for (const AdjacencyMasks& g : level) {
      for (std::uint32_t nb = 0; nb < (1u << (k - 1)); ++nb) {
        AdjacencyMasks h = g;
        h.push_back(static_cast<std::uint16_t>(nb));
        for (std::size_t x = 0; x + 1 < k; ++x) {
          if (nb >> x & 1u) h[x] |= static_cast<std::uint16_t>(1u << (k - 1));
        }
        if (seen.insert(canonical_code(h)).second) next.push_back(std::move(h));
      }
    }
    level = std::move(next);
  }
  return level;
}

}  // namespace detail

// One representative per isomorphism class of connected graphs on n nodes.
inline std::vector<WeightedGraph> connected_graphs(std::size_t n) {
  std::vector<WeightedGraph> out;
  for (const auto& adj : detail::all_graphs(n)) {
    if (!detail::is_connected(adj)) continue;
    std::vector<std::pair<int, int>> e;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (adj[i] >> j & 1u) e.emplace_back(static_cast<int>(i), static_cast<int>(j));
      }
    }
    out.push_back(make_graph(n, e));
  }
  return out;
}

// All connected graphs with 2..max_nodes nodes (one per isomorphism class).
inline std::vector<WeightedGraph> connected_graphs_upto(std::size_t max_nodes) {
  std::vector<WeightedGraph> out;
  for (std::size_t n = 2; n <= max_nodes; ++n) {
    auto g = connected_graphs(n);
    out.insert(out.end(), std::make_move_iterator(g.begin()), std::make_move_iterator(g.end()));
  }
  return out;
}

// ============================================================================
// Random instances
// ============================================================================

// Random spanning tree plus independent extra edges with probability p.
inline WeightedGraph random_connected(std::mt19937_64& rng, std::size_t n, double p, double w_lo = 1.0,
                                      double w_hi = 1.0) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> weight(w_lo, w_hi);
  std::vector<std::vector<bool>> has(n, std::vector<bool>(n, false));
  std::vector<std::pair<int, int>> e;
  for (std::size_t i = 1; i < n; ++i) {
    const auto j = static_cast<std::size_t>(std::uniform_int_distribution<std::size_t>(0, i - 1)(rng));
    has[i][j] = has[j][i] = true;
    e.emplace_back(static_cast<int>(j), static_cast<int>(i));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!has[i][j] && unit(rng) < p) e.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  }
  std::vector<double> w(e.size());
  for (double& x : w) x = w_lo == w_hi ? w_lo : weight(rng);
  return make_graph(n, e, w);
}

inline Partition random_partition(std::mt19937_64& rng, std::size_t n, std::size_t k) {
  std::uniform_int_distribution<int> pick(0, static_cast<int>(k) - 1);
  std::vector<int> labels(n);
  for (int& l : labels) l = pick(rng);
  return Partition(labels);
}

inline std::vector<double> random_weights(std::mt19937_64& rng, std::size_t m, double lo, double hi) {
  std::uniform_real_distribution<double> d(lo, hi);
  std::vector<double> w(m);
  for (double& x : w) x = d(rng);
  return w;
}

// ============================================================================
// Brute-force transport
// ============================================================================

// Minimum over every spanning-tree basis whose tree solution is feasible:
// the optimum of a transportation problem is attained at such a vertex.
inline double brute_force_transport(const lp::TransportProblem& p) {
  const std::size_t cells = p.rows * p.cols;
  const std::size_t basis = p.rows + p.cols - 1;
  double best = std::numeric_limits<double>::infinity();
  std::vector<std::size_t> pick;
  auto evaluate = [&]() {
    std::vector<double> rs(p.supply);
    std::vector<double> cd(p.demand);
    std::vector<std::uint8_t> used(pick.size(), 0);
    std::vector<double> flow(pick.size(), 0.0);
    std::size_t placed = 0;
    bool progress = true;
    while (progress && placed < pick.size()) {
      progress = false;
      for (std::size_t line = 0; line < p.rows + p.cols; ++line) {
        std::size_t count = 0;
        std::size_t last = 0;
        for (std::size_t t = 0; t < pick.size(); ++t) {
          if (used[t]) continue;
          const std::size_t i = pick[t] / p.cols;
          const std::size_t j = pick[t] % p.cols;
          if ((line < p.rows && i == line) || (line >= p.rows && j == line - p.rows)) {
            ++count;
            last = t;
          }
        }
        if (count != 1) continue;
        const std::size_t i = pick[last] / p.cols;
        const std::size_t j = pick[last] % p.cols;
        const double f = line < p.rows ? rs[i] : cd[j];
        flow[last] = f;
        rs[i] -= f;
        cd[j] -= f;
        used[last] = 1;
        ++placed;
        progress = true;
      }
    }
    if (placed != pick.size()) return;
    double cost = 0.0;
    for (std::size_t t = 0; t < pick.size(); ++t) {
      if (flow[t] < -1e-12) return;
      cost += flow[t] * p.cost[pick[t]];
    }
    for (double r : rs) if (std::abs(r) > 1e-9) return;
    for (double c : cd) if (std::abs(c) > 1e-9) return;
    best = std::min(best, cost);
  };
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (pick.size() == basis) {
      evaluate();
      return;
    }
    for (std::size_t c = start; c + (basis - pick.size()) <= cells; ++c) {
      pick.push_back(c);
      self(self, c + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
  return best;
}

}  // namespace ricci::testing
