#pragma once

#include <span>
#include <string>

#include "ricci/curvature.hpp"
#include "ricci/flow.hpp"
#include "ricci/graph.hpp"
#include "ricci/sbm.hpp"
#include "ricci/surgery.hpp"

namespace ricci {

// Shortest decimal that round-trips exactly; locale independent.
std::string format_double(double x);

std::string edge_list_text(const WeightedGraph& g);
std::string partition_text(const WeightedGraph& g, const Partition& p);
std::string sweep_csv(const SweepReport& report);
std::string curvature_csv(const WeightedGraph& g, const CurvatureMap& cmap);
std::string histogram_csv(std::span<const double> values, std::size_t bins);
std::string trajectory_csv(const WeightedGraph& g, const FlowTrajectory& traj);
std::string bad_edges_csv(const WeightedGraph& g, const BadEdgeReport& report);
std::string suite_csv(const BenchResults& results);
std::string suite_runs_csv(const BenchResults& results);

}  // namespace ricci
