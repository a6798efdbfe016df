#include "ricci/surgery.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "ricci/error.hpp"
#include "ricci/metrics.hpp"

namespace ricci {

std::string_view score_on_name(ScoreOn s) noexcept {
  return s == ScoreOn::Original ? "original" : "surgered";
}

ScoreOn parse_score_on(std::string_view text) {
  if (text == "original") return ScoreOn::Original;
  if (text == "surgered") return ScoreOn::Surgered;
  throw Error(ErrorCode::InvalidConfig, "unknown score-on mode '" + std::string(text) + "'");
}

double SweepReport::peak_q() const {
  double best = records.at(best_by_q).modularity;
  return best;
}

std::optional<double> SweepReport::peak_ari() const {
  if (!best_by_ari) return std::nullopt;
  return records.at(*best_by_ari).ari;
}

std::optional<double> SweepReport::peak_nmi() const {
  if (!best_by_nmi) return std::nullopt;
  return records.at(*best_by_nmi).nmi;
}

namespace {

// First record attaining the maximum, i.e. ties go to the larger cutoff.
template <typename Get>
std::size_t argmax_first(const std::vector<SweepRecord>& records, Get get) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < records.size(); ++i) {
    if (get(records[i]) > get(records[best])) best = i;
  }
  return best;
}

}  // namespace

SweepReport sweep(const WeightedGraph& flowed, const WeightedGraph& original, const Partition* truth,
                  const SweepOptions& options) {
  const std::size_t m = flowed.num_edges();
  if (m == 0) throw Error(ErrorCode::EmptyGraph, "nothing to sweep");
  if (!flowed.same_topology(original)) {
    throw Error(ErrorCode::MismatchedNodeSets, "flowed and original graphs differ in topology");
  }
  if (!(options.step > 0.0)) throw Error(ErrorCode::InvalidConfig, "cutoff step must be positive");
  if (truth && truth->size() != flowed.num_nodes()) {
    throw Error(ErrorCode::MismatchedNodeSets, "truth partition does not cover the graph");
  }

  SweepReport report;
  report.options = options;
  const auto w = flowed.weights();
  report.w_max = *std::max_element(w.begin(), w.end());
  report.w_min = *std::min_element(w.begin(), w.end());

  std::vector<EdgeIndex> by_weight(m);
  std::iota(by_weight.begin(), by_weight.end(), EdgeIndex{0});
  std::stable_sort(by_weight.begin(), by_weight.end(), [&](EdgeIndex a, EdgeIndex b) { return w[a] > w[b]; });

  std::vector<std::uint8_t> active(m, 1);
  std::size_t removed = 0;
  auto record_at = [&](double cutoff) {
    while (removed < m && w[by_weight[removed]] > cutoff) active[by_weight[removed++]] = 0;
    Partition part = connected_components(flowed, active);
    SweepRecord rec;
    rec.cutoff = cutoff;
    rec.removed = removed;
    rec.components = part.num_communities();
    rec.modularity = options.score_on == ScoreOn::Original ? modularity(original, part, options.gamma)
                                                           : modularity(original, part, options.gamma, active);
    if (truth) {
      rec.ari = ari(*truth, part);
      rec.nmi = nmi(*truth, part);
    }
    report.records.push_back(rec);
    report.partitions.push_back(std::move(part));
  };

  if (report.w_max <= report.w_min) {
    record_at(report.w_max);
  } else {
    for (std::size_t i = 0;; ++i) {
      const double cutoff = report.w_max - static_cast<double>(i) * options.step;
      if (!(cutoff > report.w_min)) break;
      record_at(cutoff);
    }
  }

  report.best_by_q = argmax_first(report.records, [](const SweepRecord& r) { return r.modularity; });
  if (truth) {
    report.best_by_ari = argmax_first(report.records, [](const SweepRecord& r) { return *r.ari; });
    report.best_by_nmi = argmax_first(report.records, [](const SweepRecord& r) { return *r.nmi; });
  }
  return report;
}

std::size_t best_record(const SweepReport& report, Criterion criterion) {
  if (report.records.empty()) throw Error(ErrorCode::CriterionUnavailable, "empty sweep report");
  switch (criterion) {
    case Criterion::Modularity: return report.best_by_q;
    case Criterion::Ari:
      if (!report.best_by_ari) throw Error(ErrorCode::CriterionUnavailable, "ARI needs a ground-truth partition");
      return *report.best_by_ari;
    case Criterion::Nmi:
      if (!report.best_by_nmi) throw Error(ErrorCode::CriterionUnavailable, "NMI needs a ground-truth partition");
      return *report.best_by_nmi;
  }
  return report.best_by_q;
}

const Partition& best_partition(const SweepReport& report, Criterion criterion) {
  return report.partitions.at(best_record(report, criterion));
}

}  // namespace ricci
