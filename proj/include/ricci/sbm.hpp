#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ricci/flow.hpp"
#include "ricci/graph.hpp"
#include "ricci/surgery.hpp"

namespace ricci {

// ============================================================================
// Random streams
// ============================================================================

// SplitMix64 step; used to derive per-job seeds.
std::uint64_t splitmix64(std::uint64_t& state) noexcept;

// Seed for (suite seed, cell, repetition): three chained SplitMix64 mixes.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t cell, std::uint64_t repetition) noexcept;

// ============================================================================
// Generator
// ============================================================================

struct SbmParams {
  std::size_t n = 0;
  std::size_t k = 1;
  double p_intra = 0.0;
  double p_inter = 0.0;
  std::uint64_t seed = 0;
};

struct SbmSample {
  WeightedGraph graph;
  Partition truth;
  std::size_t components = 0;
};

// Pairs (i<j) are visited in lexicographic order and each consumes one
// uniform double (top 53 bits of one std::mt19937_64 output).
SbmSample sbm_generate(const SbmParams& params);

std::vector<std::size_t> block_sizes(std::size_t n, std::size_t k);

// ============================================================================
// Benchmark harness
// ============================================================================

struct BenchCell {
  std::string param;
  SbmParams params;
};

struct BenchSuite {
  std::string id;
  std::vector<BenchCell> cells;
  std::size_t repetitions = 10;
  std::uint64_t seed = 0;
  SweepOptions sweep;
};

BenchSuite d1_suite();
BenchSuite d2_suite();
BenchSuite suite_by_name(const std::string& id);

struct BenchMethod {
  std::string name;
  FlowConfig config;
};

struct BenchRun {
  std::string param;
  std::string method;
  std::size_t cell = 0;
  std::size_t repetition = 0;
  std::uint64_t seed = 0;
  std::size_t components = 0;
  double q = 0.0;
  double ari = 0.0;
  double nmi = 0.0;
  double seconds = 0.0;
  std::optional<std::string> error;
};

struct BenchAggregate {
  std::string param;
  std::string method;
  std::string metric;
  double mean = 0.0;
  double stddev = 0.0;
  std::size_t count = 0;
};

struct BenchResults {
  std::string suite;
  std::vector<BenchRun> runs;
  std::vector<BenchAggregate> aggregates;
};

using BenchProgress = std::function<void(const BenchRun&)>;

BenchResults run_suite(const BenchSuite& suite, const std::vector<BenchMethod>& methods,
                       const BenchProgress& progress = {});

}  // namespace ricci
