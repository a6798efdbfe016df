#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ricci/distance.hpp"
#include "ricci/graph.hpp"

namespace ricci {

enum class LpBackend { Transport, DenseSimplex };

struct ProbabilityMeasure {
  std::vector<std::pair<NodeIndex, double>> support;

  double mass_of(NodeIndex x) const;
  double total() const;
};

// Mass alpha at x, the rest spread over neighbors proportionally to edge weight.
ProbabilityMeasure neighbor_measure(const WeightedGraph& g, NodeIndex x, double alpha);

// `warm`, when given, seeds the transport solver with a previous optimal basis
// and receives the new one. It only changes speed, never the optimum.
double wasserstein(const DistanceOracle& dist, const ProbabilityMeasure& mu, const ProbabilityMeasure& nu,
                   LpBackend backend = LpBackend::Transport, std::vector<std::size_t>* warm = nullptr);

double ollivier_curvature(const WeightedGraph& g, const DistanceOracle& dist, EdgeIndex e, double alpha,
                          LpBackend backend = LpBackend::Transport, std::vector<std::size_t>* warm = nullptr);
double ollivier_curvature(const WeightedGraph& g, EdgeIndex e, double alpha);

// ============================================================================
// Star coupling
// ============================================================================

struct StarCoupling {
  std::vector<NodeIndex> rows;  // x first, then N(x)
  std::vector<NodeIndex> cols;  // y first, then N(y)
  std::vector<double> row_mass;  // mu_x^0 per row, 0 for x
  std::vector<double> col_mass;  // mu_y^0 per col, 0 for y
  std::vector<double> b;         // rows x cols, row-major

  double at(std::size_t r, std::size_t c) const { return b[r * cols.size() + c]; }
  double objective(const DistanceOracle& dist) const;
  // Largest violation of the sign, total-sum, row-sum and column-sum conditions.
  double max_violation() const;
};

struct StarCurvature {
  double kappa = 0.0;
  double rho = 0.0;
  StarCoupling coupling;
};

StarCurvature star_coupling_curvature(const WeightedGraph& g, const DistanceOracle& dist, EdgeIndex e,
                                      LpBackend backend = LpBackend::Transport,
                                      std::vector<std::size_t>* warm = nullptr);
StarCurvature star_coupling_curvature(const WeightedGraph& g, EdgeIndex e);

// ============================================================================
// Curvature map
// ============================================================================

enum class CurvatureKind { StarCoupling, Ollivier };

struct CurvatureMap {
  CurvatureKind kind = CurvatureKind::StarCoupling;
  double alpha = 0.0;
  std::vector<double> kappa;
  std::vector<double> rho;
  std::uint64_t version = 0;
};

// Per-edge optimal bases carried between evaluations on one topology.
struct WarmStarts {
  std::vector<std::vector<std::size_t>> basis;
};

CurvatureMap curvature_map(const WeightedGraph& g, CurvatureKind kind = CurvatureKind::StarCoupling,
                           double alpha = 0.5, LpBackend backend = LpBackend::Transport);
CurvatureMap curvature_map(const WeightedGraph& g, const DistanceOracle& dist, CurvatureKind kind,
                           double alpha = 0.5, LpBackend backend = LpBackend::Transport,
                           WarmStarts* warm = nullptr);

}  // namespace ricci
