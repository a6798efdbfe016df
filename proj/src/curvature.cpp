#include "ricci/curvature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "ricci/error.hpp"
#include "ricci/lp/dense_simplex.hpp"
#include "ricci/lp/transport.hpp"

namespace ricci {

double ProbabilityMeasure::mass_of(NodeIndex x) const {
  for (const auto& [node, mass] : support) {
    if (node == x) return mass;
  }
  return 0.0;
}

double ProbabilityMeasure::total() const {
  double s = 0.0;
  for (const auto& entry : support) s += entry.second;
  return s;
}

ProbabilityMeasure neighbor_measure(const WeightedGraph& g, NodeIndex x, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw Error(ErrorCode::InvalidConfig, "alpha must lie in [0,1]");
  }
  const auto nbrs = g.neighbors(x);
  if (nbrs.empty()) throw Error(ErrorCode::IsolatedNode, g.node_name(x));
  const auto w = g.weights();
  double total = 0.0;
  for (const Adjacent& a : nbrs) total += w[a.edge];

  ProbabilityMeasure mu;
  mu.support.reserve(nbrs.size() + 1);
  if (alpha > 0.0) mu.support.emplace_back(x, alpha);
  if (alpha < 1.0) {
    for (const Adjacent& a : nbrs) mu.support.emplace_back(a.node, (1.0 - alpha) * w[a.edge] / total);
  }
  return mu;
}

namespace {

lp::TransportPlan solve(const lp::TransportProblem& p, LpBackend backend, std::vector<std::size_t>* warm) {
  if (backend == LpBackend::DenseSimplex) return lp::solve_transport_dense(p);
  lp::TransportOptions options;
  options.dense_flow = false;
  lp::TransportPlan plan = warm ? lp::solve_transport(p, options, *warm) : lp::solve_transport(p, options);
  if (warm) *warm = plan.basis;
  return plan;
}

double finite_distance(const DistanceOracle& dist, NodeIndex u, NodeIndex v) {
  const double d = dist.raw(u, v);
  if (!std::isfinite(d)) {
    throw Error(ErrorCode::UnreachableSupport, dist.graph().node_name(u) + " -> " + dist.graph().node_name(v));
  }
  return d;
}

}  // namespace

double wasserstein(const DistanceOracle& dist, const ProbabilityMeasure& mu, const ProbabilityMeasure& nu,
                   LpBackend backend, std::vector<std::size_t>* warm) {
  lp::TransportProblem p;
  p.rows = mu.support.size();
  p.cols = nu.support.size();
  p.supply.reserve(p.rows);
  p.demand.reserve(p.cols);
  for (const auto& entry : mu.support) p.supply.push_back(entry.second);
  for (const auto& entry : nu.support) p.demand.push_back(entry.second);
  p.cost.resize(p.rows * p.cols);
  for (std::size_t i = 0; i < p.rows; ++i) {
    for (std::size_t j = 0; j < p.cols; ++j) {
      p.cost[i * p.cols + j] = finite_distance(dist, mu.support[i].first, nu.support[j].first);
    }
  }
  return std::max(0.0, solve(p, backend, warm).cost);
}

double ollivier_curvature(const WeightedGraph& g, const DistanceOracle& dist, EdgeIndex e, double alpha,
                          LpBackend backend, std::vector<std::size_t>* warm) {
  const Edge& ed = g.edge(e);
  const double d = finite_distance(dist, ed.u, ed.v);
  const double w =
      wasserstein(dist, neighbor_measure(g, ed.u, alpha), neighbor_measure(g, ed.v, alpha), backend, warm);
  return 1.0 - w / d;
}

double ollivier_curvature(const WeightedGraph& g, EdgeIndex e, double alpha) {
  DistanceOracle dist(g, false);
  return ollivier_curvature(g, dist, e, alpha);
}

// ============================================================================
// Star coupling
// ============================================================================

double StarCoupling::objective(const DistanceOracle& dist) const {
  double total = 0.0;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) total += at(r, c) * dist.raw(rows[r], cols[c]);
  }
  return total;
}

double StarCoupling::max_violation() const {
  const std::size_t R = rows.size();
  const std::size_t C = cols.size();
  double worst = std::max(0.0, -at(0, 0));
  double total = 0.0;
  for (std::size_t r = 0; r < R; ++r) {
    for (std::size_t c = 0; c < C; ++c) {
      total += at(r, c);
      if (r != 0 || c != 0) worst = std::max(worst, at(r, c));
    }
  }
  worst = std::max(worst, std::abs(total));
  for (std::size_t r = 1; r < R; ++r) {
    double s = 0.0;
    for (std::size_t c = 0; c < C; ++c) s += at(r, c);
    worst = std::max(worst, std::abs(s + row_mass[r]));
  }
  for (std::size_t c = 1; c < C; ++c) {
    double s = 0.0;
    for (std::size_t r = 0; r < R; ++r) s += at(r, c);
    worst = std::max(worst, std::abs(s + col_mass[c]));
  }
  return worst;
}

namespace {

StarCoupling coupling_frame(const WeightedGraph& g, const Edge& ed) {
  StarCoupling sc;
  const auto w = g.weights();
  auto fill = [&](NodeIndex center, std::vector<NodeIndex>& nodes, std::vector<double>& mass) {
    const auto nbrs = g.neighbors(center);
    if (nbrs.empty()) throw Error(ErrorCode::IsolatedNode, g.node_name(center));
    double total = 0.0;
    for (const Adjacent& a : nbrs) total += w[a.edge];
    nodes.push_back(center);
    mass.push_back(0.0);
    for (const Adjacent& a : nbrs) {
      nodes.push_back(a.node);
      mass.push_back(w[a.edge] / total);
    }
  };
  fill(ed.u, sc.rows, sc.row_mass);
  fill(ed.v, sc.cols, sc.col_mass);
  sc.b.assign(sc.rows.size() * sc.cols.size(), 0.0);
  return sc;
}

// Balanced reformulation: P = -B off the anchor cell, the anchor cell (x,y)
// absorbs the slack of the x row and the y column at zero cost.
void solve_star_transport(StarCoupling& sc, const std::vector<double>& dist_rc, double rho,
                          std::vector<std::size_t>* warm) {
  const std::size_t R = sc.rows.size();
  const std::size_t C = sc.cols.size();
  thread_local lp::TransportProblem p;
  p.rows = R;
  p.cols = C;
  p.supply.assign(sc.row_mass.begin(), sc.row_mass.end());
  p.supply[0] = 1.0;
  p.demand.assign(sc.col_mass.begin(), sc.col_mass.end());
  p.demand[0] = 1.0;
  p.cost.resize(R * C);
  for (std::size_t k = 0; k < R * C; ++k) p.cost[k] = dist_rc[k] - rho;
  p.cost[0] = 0.0;
  const lp::TransportPlan plan = solve(p, LpBackend::Transport, warm);
  double anchor = 0.0;
  for (std::size_t t = 0; t < plan.basis.size(); ++t) {
    const std::size_t k = plan.basis[t];
    if (k == 0) continue;
    sc.b[k] = -plan.basis_flow[t];
    anchor += plan.basis_flow[t];
  }
  sc.b[0] = anchor;
}

// Literal formulation: variable 0 is B(x,y) >= 0, the rest are P = -B >= 0.
void solve_star_dense(StarCoupling& sc, const std::vector<double>& dist_rc, double rho) {
  const std::size_t R = sc.rows.size();
  const std::size_t C = sc.cols.size();
  const std::size_t vars = R * C;
  lp::LinearProgram lp;
  lp.num_vars = vars;
  lp.rows = 1 + (R - 1) + (C - 1);
  lp.a.assign(lp.rows * vars, 0.0);
  lp.b.assign(lp.rows, 0.0);
  lp.c.assign(vars, 0.0);
  lp.c[0] = -rho;
  lp.a[0] = 1.0;
  for (std::size_t k = 1; k < vars; ++k) {
    lp.c[k] = dist_rc[k];
    lp.a[k] = -1.0;
  }
  for (std::size_t r = 1; r < R; ++r) {
    const std::size_t row = r;
    for (std::size_t c = 0; c < C; ++c) lp.a[row * vars + r * C + c] = 1.0;
    lp.b[row] = sc.row_mass[r];
  }
  for (std::size_t c = 1; c < C; ++c) {
    const std::size_t row = R - 1 + c;
    for (std::size_t r = 0; r < R; ++r) lp.a[row * vars + r * C + c] = 1.0;
    lp.b[row] = sc.col_mass[c];
  }
  const lp::LpResult res = lp::solve_dense_simplex(lp);
  sc.b[0] = res.x[0];
  for (std::size_t k = 1; k < vars; ++k) sc.b[k] = -res.x[k];
}

}  // namespace

StarCurvature star_coupling_curvature(const WeightedGraph& g, const DistanceOracle& dist, EdgeIndex e,
                                      LpBackend backend, std::vector<std::size_t>* warm) {
  const Edge& ed = g.edge(e);
  StarCurvature out;
  out.rho = finite_distance(dist, ed.u, ed.v);
  out.coupling = coupling_frame(g, ed);
  StarCoupling& sc = out.coupling;

  const std::size_t R = sc.rows.size();
  const std::size_t C = sc.cols.size();
  std::vector<double> dist_rc(R * C);
  for (std::size_t r = 0; r < R; ++r) {
    const auto drow = dist.row(sc.rows[r]);
    for (std::size_t c = 0; c < C; ++c) {
      const double d = drow[sc.cols[c]];
      if (!std::isfinite(d)) {
        throw Error(ErrorCode::UnreachableSupport, g.node_name(sc.rows[r]) + " -> " + g.node_name(sc.cols[c]));
      }
      dist_rc[r * C + c] = d;
    }
  }

  if (backend == LpBackend::Transport) {
    solve_star_transport(sc, dist_rc, out.rho, warm);
  } else {
    solve_star_dense(sc, dist_rc, out.rho);
  }

  double objective = 0.0;
  for (std::size_t k = 0; k < R * C; ++k) objective += sc.b[k] * dist_rc[k];
  out.kappa = objective / out.rho;
  return out;
}

StarCurvature star_coupling_curvature(const WeightedGraph& g, EdgeIndex e) {
  DistanceOracle dist(g, false);
  return star_coupling_curvature(g, dist, e);
}

// ============================================================================
// Curvature map
// ============================================================================

CurvatureMap curvature_map(const WeightedGraph& g, const DistanceOracle& dist, CurvatureKind kind, double alpha,
                           LpBackend backend, WarmStarts* warm) {
  if (dist.version() != g.version()) {
    throw Error(ErrorCode::StaleSnapshot, "distance oracle belongs to a different weight vector");
  }
  CurvatureMap map;
  map.kind = kind;
  map.alpha = alpha;
  map.version = g.version();
  const std::size_t m = g.num_edges();
  map.kappa.resize(m);
  map.rho.resize(m);
  if (warm) warm->basis.resize(m);
  for (EdgeIndex e = 0; e < m; ++e) {
    std::vector<std::size_t>* hint = warm ? &warm->basis[e] : nullptr;
    map.rho[e] = dist.rho(e);
    map.kappa[e] = kind == CurvatureKind::StarCoupling ? star_coupling_curvature(g, dist, e, backend, hint).kappa
                                                       : ollivier_curvature(g, dist, e, alpha, backend, hint);
  }
  return map;
}

CurvatureMap curvature_map(const WeightedGraph& g, CurvatureKind kind, double alpha, LpBackend backend) {
  DistanceOracle dist(g, true);
  return curvature_map(g, dist, kind, alpha, backend);
}

}  // namespace ricci
