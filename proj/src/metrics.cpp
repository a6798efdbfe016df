#include "ricci/metrics.hpp"

#include <cmath>
#include <string>

#include "ricci/error.hpp"

namespace ricci {

ContingencyTable ContingencyTable::from(const Partition& p, const Partition& q) {
  if (p.size() != q.size()) {
    throw Error(ErrorCode::MismatchedNodeSets,
                std::to_string(p.size()) + " vs " + std::to_string(q.size()) + " nodes");
  }
  ContingencyTable t;
  t.rows = p.num_communities();
  t.cols = q.num_communities();
  t.n = p.size();
  t.counts.assign(t.rows * t.cols, 0);
  t.a.assign(t.rows, 0);
  t.b.assign(t.cols, 0);
  for (std::size_t x = 0; x < t.n; ++x) {
    const auto i = static_cast<std::size_t>(p[x]);
    const auto j = static_cast<std::size_t>(q[x]);
    ++t.counts[i * t.cols + j];
    ++t.a[i];
    ++t.b[j];
  }
  return t;
}

namespace {

double choose2(std::size_t k) {
  const double x = static_cast<double>(k);
  return x * (x - 1.0) / 2.0;
}

double degenerate_value(const Partition& p, const Partition& q) { return p == q ? 1.0 : 0.0; }

}  // namespace

double ari(const Partition& p, const Partition& q) {
  const ContingencyTable t = ContingencyTable::from(p, q);
  double sum_ij = 0.0;
  for (std::size_t c : t.counts) sum_ij += choose2(c);
  double sum_a = 0.0;
  double sum_b = 0.0;
  for (std::size_t c : t.a) sum_a += choose2(c);
  for (std::size_t c : t.b) sum_b += choose2(c);
  const double total = choose2(t.n);
  const double expected = total > 0.0 ? sum_a * sum_b / total : 0.0;
  const double denom = 0.5 * (sum_a + sum_b) - expected;
  if (denom == 0.0) return degenerate_value(p, q);
  return (sum_ij - expected) / denom;
}

double nmi(const Partition& p, const Partition& q) {
  const ContingencyTable t = ContingencyTable::from(p, q);
  const double n = static_cast<double>(t.n);
  double num = 0.0;
  for (std::size_t i = 0; i < t.rows; ++i) {
    for (std::size_t j = 0; j < t.cols; ++j) {
      const double nij = static_cast<double>(t.at(i, j));
      if (nij == 0.0) continue;
      num += nij * std::log(nij * n / (static_cast<double>(t.a[i]) * static_cast<double>(t.b[j])));
    }
  }
  double den = 0.0;
  for (std::size_t c : t.a) den += static_cast<double>(c) * std::log(static_cast<double>(c) / n);
  for (std::size_t c : t.b) den += static_cast<double>(c) * std::log(static_cast<double>(c) / n);
  if (den == 0.0) return degenerate_value(p, q);
  return -2.0 * num / den;
}

double modularity(const WeightedGraph& g, const Partition& p, double gamma) {
  std::vector<std::uint8_t> all(g.num_edges(), 1);
  return modularity(g, p, gamma, all);
}

double modularity(const WeightedGraph& g, const Partition& p, double gamma, std::span<const std::uint8_t> active) {
  if (p.size() != g.num_nodes()) {
    throw Error(ErrorCode::MismatchedNodeSets, "partition does not cover the graph's nodes");
  }
  if (active.size() != g.num_edges()) {
    throw Error(ErrorCode::InvalidConfig, "edge mask length does not match edge count");
  }
  std::vector<double> intra(p.num_communities(), 0.0);
  std::vector<double> degree(p.num_communities(), 0.0);
  std::size_t m = 0;
  const auto edges = g.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (!active[e]) continue;
    ++m;
    const auto cu = static_cast<std::size_t>(p[edges[e].u]);
    const auto cv = static_cast<std::size_t>(p[edges[e].v]);
    degree[cu] += 1.0;
    degree[cv] += 1.0;
    if (cu == cv) intra[cu] += 1.0;
  }
  if (m == 0) throw Error(ErrorCode::EmptyEdgeSet, "modularity needs at least one edge");
  const double em = static_cast<double>(m);
  double q = 0.0;
  for (std::size_t k = 0; k < intra.size(); ++k) {
    const double frac = degree[k] / (2.0 * em);
    q += intra[k] / em - gamma * frac * frac;
  }
  return q;
}

}  // namespace ricci
