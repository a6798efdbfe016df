#include "ricci/sbm.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <random>

#include "ricci/error.hpp"

namespace ricci {

std::uint64_t splitmix64(std::uint64_t& state) noexcept {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t cell, std::uint64_t repetition) noexcept {
  std::uint64_t state = seed;
  std::uint64_t h = splitmix64(state);
  state = h ^ cell;
  h = splitmix64(state);
  state = h ^ repetition;
  return splitmix64(state);
}

std::vector<std::size_t> block_sizes(std::size_t n, std::size_t k) {
  std::vector<std::size_t> sizes(k, n / k);
  for (std::size_t b = 0; b < n % k; ++b) ++sizes[b];
  return sizes;
}

SbmSample sbm_generate(const SbmParams& params) {
  if (params.k < 1 || params.n < params.k) {
    throw Error(ErrorCode::DegenerateParams, "need n >= k >= 1");
  }
  if (!(params.p_intra > 0.0 && params.p_intra <= 1.0) || !(params.p_inter >= 0.0 && params.p_inter < 1.0) ||
      !(params.p_intra > params.p_inter)) {
    throw Error(ErrorCode::DegenerateParams, "need 0 <= p_inter < p_intra <= 1");
  }
  std::vector<int> block(params.n);
  std::size_t next = 0;
  const auto sizes = block_sizes(params.n, params.k);
  for (std::size_t b = 0; b < sizes.size(); ++b) {
    for (std::size_t i = 0; i < sizes[b]; ++i) block[next++] = static_cast<int>(b);
  }

  std::mt19937_64 rng(params.seed);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < params.n; ++i) {
    for (std::size_t j = i + 1; j < params.n; ++j) {
      const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      const double p = block[i] == block[j] ? params.p_intra : params.p_inter;
      if (u < p) edges.push_back({i, j});
    }
  }
  std::vector<double> weights(edges.size(), 1.0);
  SbmSample sample{WeightedGraph::from_indexed(params.n, edges, weights), Partition(block), 0};
  sample.components = connected_components(sample.graph).num_communities();
  return sample;
}

// ============================================================================
// Suites
// ============================================================================

namespace {

std::string format_param(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", x);
  return buf;
}

}  // namespace

BenchSuite d1_suite() {
  BenchSuite suite;
  suite.id = "D1";
  for (int i = 1; i <= 10; ++i) {
    const double p_inter = i / 100.0;
    suite.cells.push_back({"p_inter=" + format_param(p_inter), {500, 2, 0.15, p_inter, 0}});
  }
  return suite;
}

BenchSuite d2_suite() {
  BenchSuite suite;
  suite.id = "D2";
  for (std::size_t k = 2; k <= 8; ++k) {
    suite.cells.push_back({"k=" + std::to_string(k), {250 * k, k, 0.15, 0.05, 0}});
  }
  return suite;
}

BenchSuite suite_by_name(const std::string& id) {
  if (id == "D1" || id == "d1") return d1_suite();
  if (id == "D2" || id == "d2") return d2_suite();
  throw Error(ErrorCode::InvalidConfig, "unknown suite '" + id + "'");
}

// ============================================================================
// run_suite
// ============================================================================

namespace {

void aggregate(BenchResults& results, const std::string& param, const std::string& method,
               const std::vector<const BenchRun*>& runs) {
  const std::pair<const char*, double BenchRun::*> metrics[] = {
      {"Q", &BenchRun::q}, {"ARI", &BenchRun::ari}, {"NMI", &BenchRun::nmi}};
  for (const auto& [name, field] : metrics) {
    BenchAggregate agg{param, method, name, 0.0, 0.0, 0};
    for (const BenchRun* r : runs) {
      if (r->error) continue;
      agg.mean += r->*field;
      ++agg.count;
    }
    if (agg.count > 0) agg.mean /= static_cast<double>(agg.count);
    if (agg.count > 1) {
      double ss = 0.0;
      for (const BenchRun* r : runs) {
        if (!r->error) ss += (r->*field - agg.mean) * (r->*field - agg.mean);
      }
      agg.stddev = std::sqrt(ss / static_cast<double>(agg.count - 1));
    }
    results.aggregates.push_back(agg);
  }
}

}  // namespace

BenchResults run_suite(const BenchSuite& suite, const std::vector<BenchMethod>& methods,
                       const BenchProgress& progress) {
  BenchResults results;
  results.suite = suite.id;
  for (std::size_t c = 0; c < suite.cells.size(); ++c) {
    const BenchCell& cell = suite.cells[c];
    const std::size_t first = results.runs.size();
    for (std::size_t rep = 0; rep < suite.repetitions; ++rep) {
      SbmParams params = cell.params;
      params.seed = derive_seed(suite.seed, c, rep);
      std::optional<SbmSample> sample;
      std::optional<std::string> gen_error;
      try {
        sample = sbm_generate(params);
        if (sample->components > 1) {
          std::cerr << "warning: " << suite.id << " " << cell.param << " repetition " << rep << " has "
                    << sample->components << " components\n";
        }
      } catch (const Error& err) {
        gen_error = err.what();
      }
      for (const BenchMethod& method : methods) {
        BenchRun run;
        run.param = cell.param;
        run.method = method.name;
        run.cell = c;
        run.repetition = rep;
        run.seed = params.seed;
        const auto t0 = std::chrono::steady_clock::now();
        if (gen_error) {
          run.error = gen_error;
        } else {
          run.components = sample->components;
          try {
            FlowConfig cfg = method.config;
            cfg.final_curvature = false;
            const FlowResult flowed = run_flow(sample->graph, cfg);
            const SweepReport report = sweep(flowed.graph, sample->graph, &sample->truth, suite.sweep);
            run.q = report.peak_q();
            run.ari = *report.peak_ari();
            run.nmi = *report.peak_nmi();
          } catch (const Error& err) {
            run.error = err.what();
          }
        }
        run.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        results.runs.push_back(run);
        if (progress) progress(results.runs.back());
      }
    }
    for (const BenchMethod& method : methods) {
      std::vector<const BenchRun*> runs;
      for (std::size_t i = first; i < results.runs.size(); ++i) {
        if (results.runs[i].method == method.name) runs.push_back(&results.runs[i]);
      }
      aggregate(results, cell.param, method.name, runs);
    }
  }
  return results;
}

}  // namespace ricci
