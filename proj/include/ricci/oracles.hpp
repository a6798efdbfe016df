#pragma once

#include <span>

#include "ricci/graph.hpp"

namespace ricci::oracles {

// (1 - W/d) / (1 - alpha) at each alpha, extrapolated to alpha = 1 by
// polynomial (Neville) extrapolation in h = 1 - alpha. Transport problems are
// solved with the dense reference simplex.
double lly_limit_oracle(const WeightedGraph& g, EdgeIndex e, std::span<const double> alphas);

double lly_limit_oracle(const WeightedGraph& g, EdgeIndex e);

}  // namespace ricci::oracles
