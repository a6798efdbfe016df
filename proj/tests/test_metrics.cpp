#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "brute_metrics.hpp"
#include "doctest_ext.hpp"
#include "ricci/io.hpp"
#include "ricci/metrics.hpp"
#include "support.hpp"

using namespace ricci;
using testing::brute_ari;
using testing::brute_nmi;
using testing::brute_q;

namespace {

Partition relabel(const Partition& p, std::mt19937_64& rng) {
  std::vector<int> map(p.num_communities());
  std::iota(map.begin(), map.end(), 100);
  std::shuffle(map.begin(), map.end(), rng);
  std::vector<int> labels(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) labels[i] = map[static_cast<std::size_t>(p[i])];
  return Partition(labels);
}

}  // namespace

TEST_CASE("ari: examples") {
  const Partition a(std::vector<int>{1, 1, 2, 2});
  const Partition b(std::vector<int>{1, 2, 1, 2});
  CHECK(ari(a, a) == 1.0);
  CHECK(ari(a, b) == doctest::Approx(-0.5).epsilon(1e-15));
}

TEST_CASE("nmi: examples") {
  const Partition a(std::vector<int>{1, 1, 2, 2});
  const Partition b(std::vector<int>{1, 2, 1, 2});
  CHECK(nmi(a, a) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(nmi(a, b)) <= 1e-15);
}

TEST_CASE("metrics: degenerate partitions") {
  const Partition one(std::vector<int>{0, 0, 0, 0});
  const Partition single(std::vector<int>{0, 1, 2, 3});
  CHECK(ari(one, one) == 1.0);
  CHECK(nmi(one, one) == 1.0);
  CHECK(ari(single, single) == 1.0);
  CHECK(ari(one, single) == 0.0);
  CHECK(nmi(one, single) == 0.0);
  CHECK_RICCI_ERROR(ari(one, Partition(std::vector<int>{0, 0})), ErrorCode::MismatchedNodeSets);
  CHECK_RICCI_ERROR(nmi(one, Partition(std::vector<int>{0, 0})), ErrorCode::MismatchedNodeSets);
}

TEST_CASE("ari: chance level on random labelings") {
  std::mt19937_64 rng(51);
  double total = 0.0;
  for (int t = 0; t < 1000; ++t) {
    total += ari(testing::random_partition(rng, 50, 3), testing::random_partition(rng, 50, 3));
  }
  CHECK(std::abs(total / 1000.0) <= 0.05);
}

TEST_CASE("metrics property: brute-force agreement, symmetry and relabeling") {
  std::mt19937_64 rng(52);
  for (int t = 0; t < 500; ++t) {
    const std::size_t n = 2 + t % 29;
    const Partition p = testing::random_partition(rng, n, 1 + t % 6);
    const Partition q = testing::random_partition(rng, n, 1 + (t / 6) % 7);
    REQUIRE(std::abs(ari(p, q) - brute_ari(p, q)) <= 1e-12);
    REQUIRE(std::abs(nmi(p, q) - brute_nmi(p, q)) <= 1e-12);
    CHECK(ari(p, q) == doctest::Approx(ari(q, p)).epsilon(1e-14));
    CHECK(nmi(p, q) == doctest::Approx(nmi(q, p)).epsilon(1e-14));
    CHECK(std::abs(ari(relabel(p, rng), q) - ari(p, q)) <= 1e-14);
    CHECK(std::abs(nmi(p, relabel(q, rng)) - nmi(p, q)) <= 1e-14);
    CHECK(ari(p, p) == 1.0);
    CHECK(nmi(p, p) == doctest::Approx(1.0).epsilon(1e-14));

    const WeightedGraph g = testing::random_connected(rng, n, 0.2);
    for (double gamma : {1.0, 0.5}) REQUIRE(std::abs(modularity(g, p, gamma) - brute_q(g, p, gamma)) <= 1e-12);
    CHECK(std::abs(modularity(g, relabel(p, rng)) - modularity(g, p)) <= 1e-14);
  }
}

TEST_CASE("modularity: examples") {
  const Dataset tt = load_fixture("two_triangles");
  REQUIRE(tt.truth);
  CHECK(modularity(tt.graph, *tt.truth) == 0.5);
  const Partition whole(std::vector<int>(6, 0));
  CHECK(std::abs(modularity(tt.graph, whole)) <= 1e-15);

  const Dataset k = load_fixture("karate");
  REQUIRE(k.truth);
  const double q = modularity(k.graph, *k.truth);
  CHECK(q == doctest::Approx(brute_q(k.graph, *k.truth, 1.0)).epsilon(1e-14));
  // Independent value for the two-club split (networkx, unweighted).
  CHECK(q == doctest::Approx(0.3582347140039448).epsilon(1e-14));

  std::vector<int> ids(34);
  std::iota(ids.begin(), ids.end(), 0);
  CHECK(modularity(k.graph, Partition(ids)) <= 0.0);
}

TEST_CASE("modularity: masks and errors") {
  const Dataset tt = load_fixture("two_triangles");
  const std::vector<std::uint8_t> none(tt.graph.num_edges(), 0);
  CHECK_RICCI_ERROR(modularity(tt.graph, *tt.truth, 1.0, none), ErrorCode::EmptyEdgeSet);
  CHECK_RICCI_ERROR(modularity(tt.graph, Partition(std::vector<int>{0, 1})), ErrorCode::MismatchedNodeSets);
  std::vector<std::uint8_t> first(tt.graph.num_edges(), 0);
  first[0] = 1;
  // One edge inside one community: 1 - (2/2)^2 = 0.
  CHECK(modularity(tt.graph, *tt.truth, 1.0, first) == 0.0);
}
