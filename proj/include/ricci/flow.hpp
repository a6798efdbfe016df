#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ricci/curvature.hpp"
#include "ricci/graph.hpp"

namespace ricci {

enum class FlowVariant { Rho, RhoN, Dorf, Ndorf };

std::string_view variant_name(FlowVariant v) noexcept;
FlowVariant parse_variant(std::string_view text);

struct FlowConfig {
  FlowVariant variant = FlowVariant::RhoN;
  double step = 0.1;
  std::size_t iterations = 30;
  double alpha = 0.5;
  // Unset means the per-variant default: on for Rho, off otherwise.
  std::optional<bool> enforce_theoretical_step;
  double merge_threshold = 1e-3;
  bool normalize_ndorf = true;
  bool final_curvature = true;

  bool enforce() const noexcept;
  // Throws InvalidConfig or StepOutOfTheoreticalRange.
  void validate(std::size_t num_edges) const;
};

// Largest admissible step (exclusive) for the bounded variants; nullopt otherwise.
std::optional<double> theoretical_step_limit(FlowVariant v, std::size_t num_edges);

struct Bounds {
  double lower = 0.0;
  double upper = 0.0;
};

Bounds theoretical_bounds(const FlowConfig& cfg, std::size_t num_edges, double a0, double b0, std::size_t n);

// ============================================================================
// Single steps
// ============================================================================

std::vector<double> step_rho(const WeightedGraph& g, const CurvatureMap& cmap, double s);
std::vector<double> step_rhon(const WeightedGraph& g, const CurvatureMap& cmap, double s);
std::vector<double> step_dorf(const WeightedGraph& g, const CurvatureMap& cmap, double s);
std::vector<double> step_ndorf(const WeightedGraph& g, const CurvatureMap& cmap, double s);

// ============================================================================
// Trajectory
// ============================================================================

struct FlowStep {
  std::vector<double> weights;
  std::vector<double> kappa;  // empty when curvature was not evaluated at this step
  std::vector<double> rho;
  double min_weight = 0.0;
  double max_weight = 0.0;
  Bounds bounds;
  bool bounds_checked = false;
};

struct FlowTrajectory {
  FlowConfig config;
  std::vector<FlowStep> steps;
  double a0 = 0.0;
  double b0 = 0.0;
  // Factor that maps flow-scale weights back to the input scale (NDORF normalization).
  double scale = 1.0;
};

struct FlowResult {
  FlowTrajectory trajectory;
  WeightedGraph graph;
};

FlowResult run_flow(const WeightedGraph& g, const FlowConfig& cfg);

// ============================================================================
// Bad edges
// ============================================================================

enum class BadEdgeCondition { Overlong, BelowMerge };

std::string_view condition_name(BadEdgeCondition c) noexcept;

struct BadEdgeEvent {
  EdgeIndex edge = 0;
  std::size_t first_step = 0;
  BadEdgeCondition condition = BadEdgeCondition::Overlong;
};

struct BadEdgeReport {
  std::vector<BadEdgeEvent> events;
  std::size_t overlong = 0;
  std::size_t below_merge = 0;
  std::size_t flagged = 0;
  std::size_t num_edges = 0;
  double merge_threshold = 0.0;

  double fraction() const noexcept {
    return num_edges == 0 ? 0.0 : static_cast<double>(flagged) / static_cast<double>(num_edges);
  }
};

// Condition I: w > d(endpoints); condition II: w < mt. Each edge counts once.
BadEdgeReport detect_bad_edges(const FlowTrajectory& traj, const WeightedGraph& g, double mt);

}  // namespace ricci
