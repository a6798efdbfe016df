#include "ricci/lp/transport.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>

#include "ricci/error.hpp"
#include "ricci/simd/kernels.hpp"

namespace ricci::lp {

namespace {

void validate(const TransportProblem& p, double tolerance) {
  if (p.rows == 0 || p.cols == 0) throw Error(ErrorCode::InvalidConfig, "empty transportation problem");
  if (p.supply.size() != p.rows || p.demand.size() != p.cols || p.cost.size() != p.rows * p.cols) {
    throw Error(ErrorCode::InvalidConfig, "transportation problem dimensions are inconsistent");
  }
  double s = 0.0;
  double d = 0.0;
  for (double x : p.supply) {
    if (x < 0.0) throw Error(ErrorCode::InvalidConfig, "negative supply");
    s += x;
  }
  for (double x : p.demand) {
    if (x < 0.0) throw Error(ErrorCode::InvalidConfig, "negative demand");
    d += x;
  }
  if (std::abs(s - d) > tolerance * std::max(1.0, s)) {
    throw Error(ErrorCode::LpInfeasible, "unbalanced transportation problem: " + std::to_string(s) +
                                             " vs " + std::to_string(d));
  }
}

// ============================================================================
// Spanning-tree basis
// ============================================================================

// Buffers reused across solves on one thread.
struct Workspace {
  std::vector<std::vector<std::size_t>> adj;
  std::vector<std::size_t> cell_row;
  std::vector<std::size_t> cell_col;
  std::vector<double> cell_flow;
  std::vector<double> u;
  std::vector<double> v;
  std::vector<std::size_t> parent_node;
  std::vector<std::size_t> parent_cell;
  std::vector<std::size_t> depth;
  std::vector<std::size_t> queue;
  std::vector<std::size_t> path;
  std::vector<std::size_t> back;
  std::vector<double> rs;
  std::vector<double> cd;
  std::vector<std::uint8_t> col_done;
  std::vector<std::uint8_t> row_done;
  std::vector<std::size_t> order;
  std::vector<std::size_t> remaining;
  std::vector<std::uint8_t> used;

  void reset(std::size_t rows, std::size_t cols) {
    const std::size_t nodes = rows + cols;
    if (adj.size() < nodes) adj.resize(nodes);
    for (std::size_t a = 0; a < nodes; ++a) adj[a].clear();
    cell_row.clear();
    cell_col.clear();
    cell_flow.clear();
    u.assign(rows, 0.0);
    v.assign(cols, 0.0);
    parent_node.assign(nodes, 0);
    parent_cell.assign(nodes, 0);
    depth.assign(nodes, 0);
    queue.assign(nodes, 0);
  }
};

class TreeSimplex {
 public:
  TreeSimplex(const TransportProblem& p, const TransportOptions& options, Workspace& ws)
      : p_(p), options_(options), R_(p.rows), C_(p.cols), nodes_(R_ + C_), ws_(ws),
        kernels_(simd::active_kernels()) {
    ws_.reset(R_, C_);
    for (double c : p.cost) max_abs_cost_ = std::max(max_abs_cost_, std::abs(c));
  }

  bool solve(std::span<const std::size_t> warm) {
    initial_basis(warm);
    compute_potentials();
    const std::size_t limit = options_.pivots_per_cell * R_ * C_ + 1000;
    const double tol = options_.cost_tolerance * (1.0 + max_abs_cost_);
    const std::size_t block = std::max<std::size_t>(4, R_ / 8);
    std::size_t start = 0;
    while (true) {
      // Partial pricing: scan rows cyclically and stop after a block once an
      // improving cell is known; a full pass without one proves optimality.
      double best = -tol;
      std::size_t bi = R_;
      std::size_t bj = 0;
      for (std::size_t scanned = 0; scanned < R_; ++scanned) {
        if (bi != R_ && scanned >= block) break;
        std::size_t i = start + scanned;
        if (i >= R_) i -= R_;
        double rmin = 0.0;
        const std::size_t j = kernels_.argmin_reduced(p_.cost.data() + i * C_, ws_.v.data(), ws_.u[i], C_, &rmin);
        if (rmin < best) {
          best = rmin;
          bi = i;
          bj = j;
        }
      }
      if (bi == R_) return true;
      if (pivots_ >= limit) return false;
      pivot(bi, bj);
      start = bi + 1 == R_ ? 0 : bi + 1;
    }
  }

  void export_basis(TransportPlan& plan) const {
    const std::size_t n = ws_.cell_row.size();
    plan.basis.resize(n);
    plan.basis_flow.resize(n);
    plan.cost = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t cell = ws_.cell_row[k] * C_ + ws_.cell_col[k];
      const double f = std::max(0.0, ws_.cell_flow[k]);
      plan.basis[k] = cell;
      plan.basis_flow[k] = f;
      plan.cost += f * p_.cost[cell];
    }
  }

  std::size_t pivots() const noexcept { return pivots_; }

 private:
  void add_cell(std::size_t i, std::size_t j, double f) {
    const std::size_t k = ws_.cell_row.size();
    ws_.cell_row.push_back(i);
    ws_.cell_col.push_back(j);
    ws_.cell_flow.push_back(f);
    ws_.adj[i].push_back(k);
    ws_.adj[R_ + j].push_back(k);
  }

  static void detach(std::vector<std::size_t>& list, std::size_t k) {
    auto it = std::find(list.begin(), list.end(), k);
    *it = list.back();
    list.pop_back();
  }

  // Greedy start: warm-start cells first (cheapest first), then the
  // row-minimum rule. Every allocation closes exactly one line, so the
  // R + C - 1 basic cells form a spanning tree.
  void initial_basis(std::span<const std::size_t> warm) {
    if (warm.size() == R_ + C_ - 1 && tree_start(warm)) return;
    ws_.cell_row.clear();
    ws_.cell_col.clear();
    ws_.cell_flow.clear();
    for (std::size_t a = 0; a < nodes_; ++a) ws_.adj[a].clear();

    ws_.rs.assign(p_.supply.begin(), p_.supply.end());
    ws_.cd.assign(p_.demand.begin(), p_.demand.end());
    ws_.col_done.assign(C_, 0);
    ws_.row_done.assign(R_, 0);
    rows_left_ = R_;
    cols_left_ = C_;

    if (!warm.empty()) {
      ws_.order.assign(warm.begin(), warm.end());
      std::sort(ws_.order.begin(), ws_.order.end(), [&](std::size_t a, std::size_t b) {
        return p_.cost[a] < p_.cost[b] || (p_.cost[a] == p_.cost[b] && a < b);
      });
      for (std::size_t cell : ws_.order) {
        if (cell >= R_ * C_) continue;
        const std::size_t i = cell / C_;
        const std::size_t j = cell % C_;
        if (ws_.row_done[i] || ws_.col_done[j]) continue;
        if (allocate(i, j)) return;
      }
    }

    for (std::size_t i = 0; i < R_; ++i) {
      if (ws_.row_done[i]) continue;
      const double* cost = p_.cost.data() + i * C_;
      while (!ws_.row_done[i]) {
        std::size_t j = C_;
        for (std::size_t c = 0; c < C_; ++c) {
          if (!ws_.col_done[c] && (j == C_ || cost[c] < cost[j])) j = c;
        }
        if (allocate(i, j)) return;
      }
    }
  }

  // Re-solves the flows of a previous spanning tree for the current
  // marginals by peeling leaves; succeeds when the result is feasible.
  bool tree_start(std::span<const std::size_t> warm) {
    for (std::size_t cell : warm) {
      if (cell >= R_ * C_) return false;
      add_cell(cell / C_, cell % C_, 0.0);
    }
    ws_.rs.assign(p_.supply.begin(), p_.supply.end());
    ws_.rs.insert(ws_.rs.end(), p_.demand.begin(), p_.demand.end());
    ws_.remaining.resize(nodes_);
    ws_.used.assign(warm.size(), 0);
    std::size_t tail = 0;
    for (std::size_t a = 0; a < nodes_; ++a) {
      ws_.remaining[a] = ws_.adj[a].size();
      if (ws_.remaining[a] == 0) return false;
      if (ws_.remaining[a] == 1) ws_.queue[tail++] = a;
    }
    const double slack = 1e-12;
    std::size_t head = 0;
    std::size_t placed = 0;
    while (head < tail) {
      const std::size_t a = ws_.queue[head++];
      if (ws_.remaining[a] != 1) continue;
      std::size_t k = ws_.adj[a].size();
      for (std::size_t c : ws_.adj[a]) {
        if (!ws_.used[c]) {
          k = c;
          break;
        }
      }
      const std::size_t b = a < R_ ? R_ + ws_.cell_col[k] : ws_.cell_row[k];
      const double f = ws_.rs[a];
      if (f < -slack) return false;
      ws_.cell_flow[k] = std::max(0.0, f);
      ws_.used[k] = 1;
      ++placed;
      ws_.rs[a] = 0.0;
      ws_.rs[b] -= f;
      ws_.remaining[a] = 0;
      if (--ws_.remaining[b] == 1) ws_.queue[tail++] = b;
    }
    return placed == warm.size();
  }

  // Returns true once the final cell has been placed.
  bool allocate(std::size_t i, std::size_t j) {
    const double q = std::min(ws_.rs[i], ws_.cd[j]);
    add_cell(i, j, q);
    ws_.rs[i] -= q;
    ws_.cd[j] -= q;
    if (rows_left_ == 1 && cols_left_ == 1) return true;
    const bool close_row = (ws_.rs[i] <= ws_.cd[j] && rows_left_ > 1) || cols_left_ == 1;
    if (close_row) {
      ws_.row_done[i] = 1;
      --rows_left_;
    } else {
      ws_.col_done[j] = 1;
      --cols_left_;
    }
    return false;
  }

  // Breadth-first labelling of everything reachable from `from` without
  // crossing back to its parent; sets parents, depths and potentials.
  std::size_t relabel_from(std::size_t from) {
    std::size_t head = 0;
    std::size_t tail = 0;
    ws_.queue[tail++] = from;
    while (head < tail) {
      const std::size_t a = ws_.queue[head++];
      const std::size_t up = ws_.parent_cell[a];
      for (std::size_t k : ws_.adj[a]) {
        if (k == up && a != 0) continue;
        const std::size_t i = ws_.cell_row[k];
        const std::size_t j = ws_.cell_col[k];
        const std::size_t b = a < R_ ? R_ + j : i;
        if (b == 0) continue;
        if (b >= R_) {
          ws_.v[j] = p_.cost[i * C_ + j] - ws_.u[i];
        } else {
          ws_.u[i] = p_.cost[i * C_ + j] - ws_.v[j];
        }
        ws_.depth[b] = ws_.depth[a] + 1;
        ws_.parent_node[b] = a;
        ws_.parent_cell[b] = k;
        ws_.queue[tail++] = b;
      }
    }
    return tail;
  }

  void compute_potentials() {
    ws_.u[0] = 0.0;
    ws_.depth[0] = 0;
    ws_.parent_node[0] = 0;
    ws_.parent_cell[0] = static_cast<std::size_t>(-1);
    if (relabel_from(0) != nodes_) throw Error(ErrorCode::LpNumericalFailure, "basis is not a spanning tree");
  }

  void pivot(std::size_t ei, std::size_t ej) {
    // Path from column ej to row ei through the tree, in that order.
    std::vector<std::size_t>& path = ws_.path;
    std::vector<std::size_t>& back = ws_.back;
    path.clear();
    back.clear();
    std::size_t a = R_ + ej;
    std::size_t b = ei;
    while (a != b) {
      if (ws_.depth[a] >= ws_.depth[b]) {
        path.push_back(ws_.parent_cell[a]);
        a = ws_.parent_node[a];
      } else {
        back.push_back(ws_.parent_cell[b]);
        b = ws_.parent_node[b];
      }
    }
    const std::size_t col_side = path.size();
    path.insert(path.end(), back.rbegin(), back.rend());

    double theta = 0.0;
    std::size_t leave = path.size();
    for (std::size_t t = 0; t < path.size(); t += 2) {
      const double f = ws_.cell_flow[path[t]];
      if (leave == path.size() || f < theta) {
        theta = f;
        leave = t;
      }
    }
    theta = std::max(0.0, theta);
    for (std::size_t t = 0; t < path.size(); ++t) {
      double& f = ws_.cell_flow[path[t]];
      f = (t % 2 == 0) ? std::max(0.0, f - theta) : f + theta;
    }

    // The leaving cell cuts off the subtree holding one endpoint of the
    // entering cell; that subtree is re-hung from the entering cell.
    const std::size_t k = path[leave];
    detach(ws_.adj[ws_.cell_row[k]], k);
    detach(ws_.adj[R_ + ws_.cell_col[k]], k);
    ws_.cell_row[k] = ei;
    ws_.cell_col[k] = ej;
    ws_.cell_flow[k] = theta;
    ws_.adj[ei].push_back(k);
    ws_.adj[R_ + ej].push_back(k);

    const std::size_t inner = leave < col_side ? R_ + ej : ei;
    const std::size_t outer = inner == ei ? R_ + ej : ei;
    ws_.parent_node[inner] = outer;
    ws_.parent_cell[inner] = k;
    ws_.depth[inner] = ws_.depth[outer] + 1;
    if (inner >= R_) {
      ws_.v[ej] = p_.cost[ei * C_ + ej] - ws_.u[ei];
    } else {
      ws_.u[ei] = p_.cost[ei * C_ + ej] - ws_.v[ej];
    }
    relabel_from(inner);
    ++pivots_;
  }

  const TransportProblem& p_;
  TransportOptions options_;
  std::size_t R_;
  std::size_t C_;
  std::size_t nodes_;
  double max_abs_cost_ = 0.0;
  Workspace& ws_;
  const simd::KernelTable& kernels_;
  std::size_t pivots_ = 0;
  std::size_t rows_left_ = 0;
  std::size_t cols_left_ = 0;
};

double plan_cost(const TransportProblem& p, const std::vector<double>& flow) {
  double total = 0.0;
  for (std::size_t k = 0; k < flow.size(); ++k) total += flow[k] * p.cost[k];
  return total;
}

}  // namespace

LinearProgram transport_as_lp(const TransportProblem& p) {
  LinearProgram lp;
  lp.rows = p.rows + p.cols;
  lp.num_vars = p.rows * p.cols;
  lp.a.assign(lp.rows * lp.num_vars, 0.0);
  lp.b.resize(lp.rows);
  lp.c = p.cost;
  for (std::size_t i = 0; i < p.rows; ++i) {
    for (std::size_t j = 0; j < p.cols; ++j) {
      const std::size_t var = i * p.cols + j;
      lp.a[i * lp.num_vars + var] = 1.0;
      lp.a[(p.rows + j) * lp.num_vars + var] = 1.0;
    }
    lp.b[i] = p.supply[i];
  }
  for (std::size_t j = 0; j < p.cols; ++j) lp.b[p.rows + j] = p.demand[j];
  return lp;
}

TransportPlan solve_transport_dense(const TransportProblem& problem) {
  validate(problem, 1e-9);
  const LpResult r = solve_dense_simplex(transport_as_lp(problem));
  TransportPlan plan;
  plan.flow = r.x;
  plan.cost = plan_cost(problem, plan.flow);
  for (std::size_t k = 0; k < plan.flow.size(); ++k) {
    if (plan.flow[k] > 0.0) {
      plan.basis.push_back(k);
      plan.basis_flow.push_back(plan.flow[k]);
    }
  }
  plan.pivots = r.pivots;
  plan.used_fallback = true;
  return plan;
}

TransportPlan solve_transport(const TransportProblem& problem, const TransportOptions& options,
                              std::span<const std::size_t> warm_start) {
  validate(problem, options.balance_tolerance);
  thread_local Workspace workspace;
  TreeSimplex solver(problem, options, workspace);
  if (!solver.solve(warm_start)) {
    TransportPlan plan = solve_transport_dense(problem);
    if (!options.dense_flow) plan.flow.clear();
    return plan;
  }
  TransportPlan plan;
  solver.export_basis(plan);
  if (options.dense_flow) {
    plan.flow.assign(problem.rows * problem.cols, 0.0);
    for (std::size_t k = 0; k < plan.basis.size(); ++k) plan.flow[plan.basis[k]] = plan.basis_flow[k];
  }
  plan.pivots = solver.pivots();
  return plan;
}

}  // namespace ricci::lp
