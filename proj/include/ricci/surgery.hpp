#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "ricci/graph.hpp"

namespace ricci {

enum class ScoreOn { Original, Surgered };

std::string_view score_on_name(ScoreOn s) noexcept;
ScoreOn parse_score_on(std::string_view text);

struct SweepOptions {
  double step = 0.01;
  double gamma = 1.0;
  ScoreOn score_on = ScoreOn::Original;
};

struct SweepRecord {
  double cutoff = 0.0;
  std::size_t removed = 0;
  std::size_t components = 0;
  double modularity = 0.0;
  std::optional<double> ari;
  std::optional<double> nmi;
};

struct SweepReport {
  SweepOptions options;
  double w_max = 0.0;
  double w_min = 0.0;
  std::vector<SweepRecord> records;
  std::vector<Partition> partitions;
  std::size_t best_by_q = 0;
  std::optional<std::size_t> best_by_ari;
  std::optional<std::size_t> best_by_nmi;

  // Per-metric maxima over all records.
  double peak_q() const;
  std::optional<double> peak_ari() const;
  std::optional<double> peak_nmi() const;
};

// Cumulatively removes edges heavier than a descending cutoff and scores the
// resulting components. flowed and original must share one topology.
SweepReport sweep(const WeightedGraph& flowed, const WeightedGraph& original, const Partition* truth,
                  const SweepOptions& options = {});

enum class Criterion { Modularity, Ari, Nmi };

std::size_t best_record(const SweepReport& report, Criterion criterion);
const Partition& best_partition(const SweepReport& report, Criterion criterion);

}  // namespace ricci
