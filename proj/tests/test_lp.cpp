#include <cmath>
#include <limits>
#include <optional>
#include <random>
#include <vector>

#include "doctest_ext.hpp"
#include "ricci/lp/dense_simplex.hpp"
#include "ricci/lp/transport.hpp"
#include "support.hpp"

using namespace ricci;
using namespace ricci::lp;

namespace {

TransportProblem random_problem(std::mt19937_64& rng, std::size_t rows, std::size_t cols, bool degenerate) {
  std::uniform_real_distribution<double> u(0.05, 1.0);
  std::uniform_int_distribution<int> small(0, 4);
  TransportProblem p;
  p.rows = rows;
  p.cols = cols;
  p.supply.resize(rows);
  p.demand.resize(cols);
  double s = 0.0;
  double d = 0.0;
  for (double& x : p.supply) s += x = degenerate ? 1.0 : u(rng);
  for (double& x : p.demand) d += x = degenerate ? 1.0 : u(rng);
  for (double& x : p.supply) x /= s;
  for (double& x : p.demand) x /= d;
  p.cost.resize(rows * cols);
  for (double& c : p.cost) c = degenerate ? static_cast<double>(small(rng)) : u(rng) * 3.0 - 1.0;
  return p;
}

double plan_objective(const TransportProblem& p, const TransportPlan& plan) {
  double total = 0.0;
  for (std::size_t t = 0; t < plan.basis.size(); ++t) total += plan.basis_flow[t] * p.cost[plan.basis[t]];
  return total;
}

void check_marginals(const TransportProblem& p, const TransportPlan& plan, double tol) {
  REQUIRE(plan.flow.size() == p.rows * p.cols);
  for (std::size_t i = 0; i < p.rows; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < p.cols; ++j) {
      CHECK(plan.flow[i * p.cols + j] >= 0.0);
      s += plan.flow[i * p.cols + j];
    }
    CHECK(std::abs(s - p.supply[i]) <= tol);
  }
  for (std::size_t j = 0; j < p.cols; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < p.rows; ++i) s += plan.flow[i * p.cols + j];
    CHECK(std::abs(s - p.demand[j]) <= tol);
  }
}

}  // namespace

// ============================================================================
// Dense simplex
// ============================================================================

TEST_CASE("dense simplex: small LP") {
  // min -x - y  s.t.  x + 2y + s1 = 4, 3x + y + s2 = 6
  LinearProgram lp;
  lp.rows = 2;
  lp.num_vars = 4;
  lp.a = {1, 2, 1, 0, 3, 1, 0, 1};
  lp.b = {4, 6};
  lp.c = {-1, -1, 0, 0};
  const LpResult r = solve_dense_simplex(lp);
  CHECK(r.objective == doctest::Approx(-2.8).epsilon(1e-12));
  CHECK(r.x[0] == doctest::Approx(1.6).epsilon(1e-12));
  CHECK(r.x[1] == doctest::Approx(1.2).epsilon(1e-12));
}

TEST_CASE("dense simplex: infeasible and unbounded") {
  LinearProgram infeasible;
  infeasible.rows = 2;
  infeasible.num_vars = 1;
  infeasible.a = {1, 1};
  infeasible.b = {1, 2};
  infeasible.c = {1};
  CHECK_RICCI_ERROR(solve_dense_simplex(infeasible), ErrorCode::LpInfeasible);

  LinearProgram unbounded;
  unbounded.rows = 1;
  unbounded.num_vars = 2;
  unbounded.a = {1, -1};
  unbounded.b = {1};
  unbounded.c = {0, -1};
  CHECK_RICCI_ERROR(solve_dense_simplex(unbounded), ErrorCode::LpUnbounded);
}

TEST_CASE("dense simplex: redundant equality rows") {
  // Transport constraints always carry one redundant row.
  TransportProblem p;
  p.rows = 2;
  p.cols = 2;
  p.supply = {0.5, 0.5};
  p.demand = {0.5, 0.5};
  p.cost = {0, 1, 1, 0};
  const LpResult r = solve_dense_simplex(transport_as_lp(p));
  CHECK(std::abs(r.objective) <= 1e-12);
}

// ============================================================================
// Transportation simplex
// ============================================================================

TEST_CASE("transport: two-point example") {
  TransportProblem p;
  p.rows = 2;
  p.cols = 2;
  p.supply = {0.75, 0.25};
  p.demand = {0.25, 0.75};
  p.cost = {0, 1, 1, 0};
  const TransportPlan plan = solve_transport(p);
  CHECK(plan.cost == doctest::Approx(0.5).epsilon(1e-14));
  check_marginals(p, plan, 1e-14);
  CHECK_FALSE(plan.used_fallback);
}

TEST_CASE("transport: validation") {
  TransportProblem p;
  p.rows = 1;
  p.cols = 2;
  p.supply = {1.0};
  p.demand = {0.5, 0.6};
  p.cost = {0, 0};
  CHECK_RICCI_ERROR(solve_transport(p), ErrorCode::LpInfeasible);
  p.demand = {0.5};
  CHECK_RICCI_ERROR(solve_transport(p), ErrorCode::InvalidConfig);
}

TEST_CASE("transport property: matches brute-force vertex enumeration") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t rows = 1 + trial % 3;
    const std::size_t cols = 1 + (trial / 3) % 4;
    const TransportProblem p = random_problem(rng, rows, cols, trial % 2 == 0);
    const double brute = testing::brute_force_transport(p);
    const TransportPlan plan = solve_transport(p);
    CHECK(plan.cost == doctest::Approx(brute).epsilon(1e-11));
    check_marginals(p, plan, 1e-12);
  }
}

TEST_CASE("transport property: tree simplex equals dense simplex") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t rows = 1 + trial % 11;
    const std::size_t cols = 1 + (trial * 7) % 13;
    const TransportProblem p = random_problem(rng, rows, cols, trial % 3 == 0);
    const TransportPlan tree = solve_transport(p);
    const TransportPlan dense = solve_transport_dense(p);
    CHECK(std::abs(tree.cost - dense.cost) <= 1e-10);
    check_marginals(p, tree, 1e-12);
    CHECK(std::abs(plan_objective(p, tree) - tree.cost) <= 1e-15);
  }
}

TEST_CASE("transport property: warm start changes speed, not the optimum") {
  std::mt19937_64 rng(23);
  std::normal_distribution<double> jitter(0.0, 0.01);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t rows = 3 + trial % 20;
    const std::size_t cols = 3 + (trial * 5) % 20;
    TransportProblem p = random_problem(rng, rows, cols, trial % 4 == 0);
    const TransportPlan first = solve_transport(p);
    for (double& c : p.cost) c += jitter(rng);
    const TransportPlan cold = solve_transport(p);
    const TransportPlan warm = solve_transport(p, {}, first.basis);
    CHECK(std::abs(cold.cost - warm.cost) <= 1e-12);
    check_marginals(p, warm, 1e-12);
    // A stale or malformed hint is still safe.
    std::vector<std::size_t> junk{0, 0, rows * cols + 5, 1};
    const TransportPlan odd = solve_transport(p, {}, junk);
    CHECK(std::abs(cold.cost - odd.cost) <= 1e-12);
  }
}
