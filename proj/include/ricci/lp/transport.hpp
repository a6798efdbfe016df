#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ricci/lp/dense_simplex.hpp"

namespace ricci::lp {

// Balanced transportation problem: rows x cols cells, row-major costs.
struct TransportProblem {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> supply;
  std::vector<double> demand;
  std::vector<double> cost;
};

struct TransportPlan {
  double cost = 0.0;
  std::vector<double> flow;  // empty unless TransportOptions::dense_flow
  // Final basic cells (row * cols + col) and their flows.
  std::vector<std::size_t> basis;
  std::vector<double> basis_flow;
  std::size_t pivots = 0;
  bool used_fallback = false;
};

struct TransportOptions {
  double balance_tolerance = 1e-9;
  double cost_tolerance = 1e-11;
  // Pivots allowed per cell before handing the problem to the dense solver.
  std::size_t pivots_per_cell = 20;
  bool dense_flow = true;
};

// Transportation simplex on a spanning-tree basis with u-v potentials.
// `warm_start` lists cells tried first, in order, when building the initial
// basis (typically the optimal basis of a nearby problem).
TransportPlan solve_transport(const TransportProblem& problem, const TransportOptions& options = {},
                              std::span<const std::size_t> warm_start = {});

// Same problem through the dense reference simplex.
TransportPlan solve_transport_dense(const TransportProblem& problem);

LinearProgram transport_as_lp(const TransportProblem& problem);

}  // namespace ricci::lp
