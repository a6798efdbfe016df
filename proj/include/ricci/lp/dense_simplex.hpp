#pragma once

#include <cstddef>
#include <vector>

namespace ricci::lp {

// minimize c.x  subject to  A x = b, x >= 0  (A is rows x num_vars, row-major)
struct LinearProgram {
  std::size_t rows = 0;
  std::size_t num_vars = 0;
  std::vector<double> a;
  std::vector<double> b;
  std::vector<double> c;
};

struct SimplexOptions {
  double pivot_tolerance = 1e-10;
  double cost_tolerance = 1e-10;
  double feasibility_tolerance = 1e-9;
  std::size_t max_pivots = 200000;
};

struct LpResult {
  double objective = 0.0;
  std::vector<double> x;
  std::size_t pivots = 0;
};

// Two-phase primal simplex on a dense tableau with Bland's rule.
LpResult solve_dense_simplex(const LinearProgram& lp, const SimplexOptions& options = {});

}  // namespace ricci::lp
