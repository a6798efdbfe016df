#include <cmath>
#include <map>
#include <random>
#include <vector>

#include "doctest_ext.hpp"
#include "ricci/curvature.hpp"
#include "ricci/io.hpp"
#include "ricci/oracles.hpp"
#include "support.hpp"

using namespace ricci;

namespace {

double brute_force_w(const DistanceOracle& d, const ProbabilityMeasure& mu, const ProbabilityMeasure& nu) {
  lp::TransportProblem p;
  p.rows = mu.support.size();
  p.cols = nu.support.size();
  for (const auto& [x, m] : mu.support) p.supply.push_back(m);
  for (const auto& [y, m] : nu.support) p.demand.push_back(m);
  for (const auto& [x, mx] : mu.support) {
    for (const auto& [y, my] : nu.support) p.cost.push_back(d.raw(x, y));
  }
  return testing::brute_force_transport(p);
}

void check_certificate(const WeightedGraph& g, const DistanceOracle& d, EdgeIndex e, const StarCurvature& sc) {
  const StarCoupling& c = sc.coupling;
  const Edge& ed = g.edge(e);
  REQUIRE(c.rows.front() == ed.u);
  REQUIRE(c.cols.front() == ed.v);
  CHECK(c.at(0, 0) >= 0.0);
  CHECK(c.max_violation() <= 1e-9);
  double total = 0.0;
  for (std::size_t r = 0; r < c.rows.size(); ++r) {
    double row = 0.0;
    for (std::size_t k = 0; k < c.cols.size(); ++k) {
      if (r != 0 || k != 0) CHECK(c.at(r, k) <= 0.0);
      row += c.at(r, k);
    }
    total += row;
    if (r > 0) CHECK(std::abs(row + c.row_mass[r]) <= 1e-9);
  }
  CHECK(std::abs(total) <= 1e-9);
  for (std::size_t k = 1; k < c.cols.size(); ++k) {
    double col = 0.0;
    for (std::size_t r = 0; r < c.rows.size(); ++r) col += c.at(r, k);
    CHECK(std::abs(col + c.col_mass[k]) <= 1e-9);
  }
  CHECK(std::abs(c.objective(d) / sc.rho - sc.kappa) <= 1e-9);
}

}  // namespace

// ============================================================================
// Measures and transport
// ============================================================================

TEST_CASE("measure: examples") {
  const WeightedGraph g = testing::single_edge();
  const ProbabilityMeasure m = neighbor_measure(g, 0, 0.0);
  REQUIRE(m.support.size() == 1);
  CHECK(m.support[0].first == 1);
  CHECK(m.support[0].second == 1.0);

  const WeightedGraph star = testing::make_graph(4, {{0, 1}, {0, 2}, {0, 3}});
  const ProbabilityMeasure s = neighbor_measure(star, 0, 0.5);
  CHECK(s.mass_of(0) == 0.5);
  for (NodeIndex leaf = 1; leaf <= 3; ++leaf) CHECK(s.mass_of(leaf) == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
  CHECK(std::abs(s.total() - 1.0) <= 1e-12);

  const WeightedGraph two = testing::make_graph(3, {{0, 1}, {0, 2}}, {1.0, 3.0});
  const ProbabilityMeasure t = neighbor_measure(two, 0, 0.0);
  CHECK(t.mass_of(1) == 0.25);
  CHECK(t.mass_of(2) == 0.75);

  CHECK_RICCI_ERROR(neighbor_measure(g, 0, 1.5), ErrorCode::InvalidConfig);
  const WeightedGraph iso = WeightedGraph::build(std::vector<EdgeTriple>{{"a", "b", 1.0}},
                                                 std::vector<std::string>{"lonely"});
  CHECK_RICCI_ERROR(neighbor_measure(iso, 2, 0.5), ErrorCode::IsolatedNode);
}

TEST_CASE("wasserstein: examples") {
  const WeightedGraph g = testing::single_edge();
  const DistanceOracle d(g);
  for (double alpha : {0.0, 0.2, 0.5, 0.7, 1.0}) {
    const double w = wasserstein(d, neighbor_measure(g, 0, alpha), neighbor_measure(g, 1, alpha));
    CHECK(w == doctest::Approx(std::abs(2.0 * alpha - 1.0)).epsilon(1e-14));
    CHECK(wasserstein(d, neighbor_measure(g, 0, alpha), neighbor_measure(g, 0, alpha)) == 0.0);
  }
  const WeightedGraph tri = testing::triangle();
  const DistanceOracle dt(tri);
  const auto mx = neighbor_measure(tri, 0, 0.0);
  const auto my = neighbor_measure(tri, 1, 0.0);
  const double brute = brute_force_w(dt, mx, my);
  CHECK(brute == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(wasserstein(dt, mx, my) == doctest::Approx(brute).epsilon(1e-14));
  CHECK(wasserstein(dt, mx, my, LpBackend::DenseSimplex) == doctest::Approx(brute).epsilon(1e-14));
}

TEST_CASE("ollivier: examples") {
  const WeightedGraph g = testing::single_edge();
  CHECK(ollivier_curvature(g, 0, 0.5) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(ollivier_curvature(g, 0, 0.0) == doctest::Approx(0.0).epsilon(1e-14));
  const WeightedGraph tri = testing::triangle();
  const DistanceOracle dt(tri);
  const double brute = 1.0 - brute_force_w(dt, neighbor_measure(tri, 0, 0.0), neighbor_measure(tri, 1, 0.0));
  CHECK(ollivier_curvature(tri, 0, 0.0) == doctest::Approx(brute).epsilon(1e-14));
}

TEST_CASE("wasserstein property: symmetry, identity and triangle inequality") {
  for (const WeightedGraph& g : testing::connected_graphs_upto(6)) {
    const DistanceOracle d(g);
    const std::size_t n = g.num_nodes();
    for (double alpha : {0.0, 0.5}) {
      std::vector<ProbabilityMeasure> mu;
      for (NodeIndex x = 0; x < n; ++x) mu.push_back(neighbor_measure(g, x, alpha));
      std::vector<double> w(n * n);
      for (NodeIndex x = 0; x < n; ++x) {
        for (NodeIndex y = 0; y < n; ++y) w[x * n + y] = wasserstein(d, mu[x], mu[y]);
      }
      for (NodeIndex x = 0; x < n; ++x) {
        REQUIRE(std::abs(w[x * n + x]) <= 1e-12);
        for (NodeIndex y = 0; y < n; ++y) {
          REQUIRE(std::abs(w[x * n + y] - w[y * n + x]) <= 1e-12);
          for (NodeIndex z = 0; z < n; ++z) REQUIRE(w[x * n + z] <= w[x * n + y] + w[y * n + z] + 1e-12);
        }
      }
    }
  }
}

// ============================================================================
// Star coupling
// ============================================================================

TEST_CASE("star coupling: single edge") {
  const WeightedGraph g = testing::single_edge();
  const DistanceOracle d(g);
  const StarCurvature sc = star_coupling_curvature(g, d, 0);
  CHECK(sc.kappa == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(sc.rho == 1.0);
  // rows (x, y), cols (y, x)
  CHECK(sc.coupling.at(0, 0) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(sc.coupling.at(0, 1) == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(sc.coupling.at(1, 0) == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(sc.coupling.at(1, 1) == doctest::Approx(0.0).epsilon(1e-14));
  check_certificate(g, d, 0, sc);
}

TEST_CASE("star coupling: triangle and path against the limit oracle") {
  const WeightedGraph tri = testing::triangle();
  for (EdgeIndex e = 0; e < 3; ++e) {
    CHECK(star_coupling_curvature(tri, e).kappa == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(std::abs(oracles::lly_limit_oracle(tri, e) - 1.5) <= 1e-3);
  }
  const WeightedGraph path = testing::make_graph(3, {{0, 1}, {1, 2}});
  const double oracle = oracles::lly_limit_oracle(path, 0);
  CHECK(std::abs(star_coupling_curvature(path, 0).kappa - oracle) <= 1e-3);
  CHECK(oracle == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("limit oracle: single edge and 4-cycle") {
  const WeightedGraph g = testing::single_edge();
  const DistanceOracle d(g);
  for (double alpha : {0.5, 0.6, 0.9, 0.99}) {
    CHECK((1.0 - wasserstein(d, neighbor_measure(g, 0, alpha), neighbor_measure(g, 1, alpha))) / (1.0 - alpha) ==
          doctest::Approx(2.0).epsilon(1e-12));
  }
  CHECK(oracles::lly_limit_oracle(g, 0) == doctest::Approx(2.0).epsilon(1e-9));
  const WeightedGraph c4 = testing::cycle(4);
  for (EdgeIndex e = 0; e < 4; ++e) {
    CHECK(std::abs(oracles::lly_limit_oracle(c4, e) - star_coupling_curvature(c4, e).kappa) <= 1e-3);
  }
}

TEST_CASE("star coupling property: limit oracle on small graphs") {
  std::size_t edges = 0;
  for (const WeightedGraph& g : testing::connected_graphs_upto(5)) {
    const DistanceOracle d(g);
    for (EdgeIndex e = 0; e < g.num_edges(); ++e, ++edges) {
      const double star = star_coupling_curvature(g, d, e).kappa;
      REQUIRE(std::abs(star - oracles::lly_limit_oracle(g, e)) <= 1e-3);
    }
  }
  CHECK(edges > 100);
}

TEST_CASE("star coupling property: weighted graphs against the limit oracle") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    const WeightedGraph g = testing::random_connected(rng, 4 + trial % 4, 0.4, 0.5, 2.0);
    for (EdgeIndex e = 0; e < g.num_edges(); ++e) {
      REQUIRE(std::abs(star_coupling_curvature(g, e).kappa - oracles::lly_limit_oracle(g, e)) <= 1e-3);
    }
  }
}

TEST_CASE("star coupling property: backends, certificate and curvature bounds") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 40; ++trial) {
    const WeightedGraph g = testing::random_connected(rng, 4 + trial % 9, 0.35, 0.2, 3.0);
    const DistanceOracle d(g);
    const auto w = g.weights();
    const double w_max = *std::max_element(w.begin(), w.end());
    for (EdgeIndex e = 0; e < g.num_edges(); ++e) {
      const StarCurvature tree = star_coupling_curvature(g, d, e, LpBackend::Transport);
      const StarCurvature dense = star_coupling_curvature(g, d, e, LpBackend::DenseSimplex);
      CHECK(std::abs(tree.kappa - dense.kappa) <= 1e-9);
      check_certificate(g, d, e, tree);
      check_certificate(g, d, e, dense);
      CHECK(tree.kappa <= 2.0 + 1e-12);
      CHECK(tree.kappa * tree.rho <= 2.0 * g.weight(e) + 1e-12);
      CHECK(tree.kappa * tree.rho >= -2.0 * w_max - 1e-12);
    }
  }
}

TEST_CASE("star coupling property: locally Lipschitz in the weights") {
  std::mt19937_64 rng(33);
  std::size_t checked = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const WeightedGraph g = testing::random_connected(rng, 5 + trial % 5, 0.4, 0.5, 2.0);
    const auto eta = testing::random_weights(rng, g.num_edges(), -1.0, 1.0);
    for (EdgeIndex e = 0; e < g.num_edges(); ++e) {
      const double base = star_coupling_curvature(g, e).kappa;
      std::vector<double> diffs;
      for (double delta = 1e-2; delta > 1e-5; delta /= 2.0) {
        std::vector<double> w(g.weights().begin(), g.weights().end());
        for (std::size_t t = 0; t < w.size(); ++t) w[t] += delta * eta[t];
        diffs.push_back(std::abs(star_coupling_curvature(g.with_weights(w), e).kappa - base));
      }
      CHECK(diffs.back() <= 1e-3);
      for (std::size_t t = 1; t < diffs.size(); ++t) {
        if (diffs[t] > 1e-13) {
          CHECK(diffs[t - 1] / diffs[t] <= 4.0 + 1e-6);
          ++checked;
        }
      }
    }
  }
  CHECK(checked > 100);
}

// ============================================================================
// Curvature map
// ============================================================================

TEST_CASE("curvature map: single edge and karate") {
  const CurvatureMap one = curvature_map(testing::single_edge(3.0));
  REQUIRE(one.kappa.size() == 1);
  CHECK(one.kappa[0] == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(one.rho[0] == 3.0);

  const WeightedGraph karate = load_fixture("karate").graph;
  const CurvatureMap map = curvature_map(karate);
  CHECK(map.kappa.size() == 78);
  CHECK(map.version == karate.version());
  for (double k : map.kappa) {
    CHECK(k <= 2.0 + 1e-12);
    CHECK(k >= -2.0 - 1e-12);
  }
}

TEST_CASE("curvature map: warm starts leave values unchanged") {
  const WeightedGraph karate = load_fixture("karate").graph;
  const DistanceOracle d(karate);
  WarmStarts warm;
  const CurvatureMap cold = curvature_map(karate, d, CurvatureKind::StarCoupling);
  const CurvatureMap first = curvature_map(karate, d, CurvatureKind::StarCoupling, 0.5, LpBackend::Transport, &warm);
  const CurvatureMap again = curvature_map(karate, d, CurvatureKind::StarCoupling, 0.5, LpBackend::Transport, &warm);
  for (std::size_t e = 0; e < cold.kappa.size(); ++e) {
    CHECK(std::abs(cold.kappa[e] - first.kappa[e]) <= 1e-12);
    CHECK(std::abs(cold.kappa[e] - again.kappa[e]) <= 1e-12);
  }
  const CurvatureMap oll = curvature_map(karate, d, CurvatureKind::Ollivier, 0.5, LpBackend::Transport, &warm);
  const CurvatureMap oll_cold = curvature_map(karate, d, CurvatureKind::Ollivier, 0.5);
  for (std::size_t e = 0; e < oll.kappa.size(); ++e) CHECK(std::abs(oll.kappa[e] - oll_cold.kappa[e]) <= 1e-12);
}

TEST_CASE("curvature map: stale distances and disconnected support") {
  WeightedGraph g = testing::triangle();
  const DistanceOracle d(g);
  g.set_weights({2.0, 1.0, 1.0});
  CHECK_RICCI_ERROR(curvature_map(g, d, CurvatureKind::StarCoupling), ErrorCode::StaleSnapshot);

  // Edges of separate components never see each other.
  const CurvatureMap two = curvature_map(load_fixture("two_triangles").graph);
  for (double k : two.kappa) CHECK(k == doctest::Approx(1.5).epsilon(1e-12));
}
