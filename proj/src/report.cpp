#include "ricci/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "ricci/error.hpp"

namespace ricci {

std::string format_double(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  if (ec != std::errc()) throw Error(ErrorCode::IoError, "number formatting failed");
  return std::string(buf, ptr);
}

namespace {

std::string optional_cell(const std::optional<double>& x) { return x ? format_double(*x) : std::string(); }

void append_edge(std::string& out, const WeightedGraph& g, EdgeIndex e) {
  const Edge& ed = g.edge(e);
  out += g.node_name(ed.u);
  out += ',';
  out += g.node_name(ed.v);
}

}  // namespace

std::string edge_list_text(const WeightedGraph& g) {
  std::string out;
  for (EdgeIndex e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    out += g.node_name(ed.u) + ' ' + g.node_name(ed.v) + ' ' + format_double(g.weight(e)) + '\n';
  }
  return out;
}

std::string partition_text(const WeightedGraph& g, const Partition& p) {
  std::string out;
  for (NodeIndex x = 0; x < p.size(); ++x) out += g.node_name(x) + ' ' + std::to_string(p[x]) + '\n';
  return out;
}

std::string sweep_csv(const SweepReport& report) {
  std::string out = "cutoff,removed,components,Q,ARI,NMI\n";
  for (const SweepRecord& r : report.records) {
    out += format_double(r.cutoff) + ',' + std::to_string(r.removed) + ',' + std::to_string(r.components) + ',' +
           format_double(r.modularity) + ',' + optional_cell(r.ari) + ',' + optional_cell(r.nmi) + '\n';
  }
  return out;
}

std::string curvature_csv(const WeightedGraph& g, const CurvatureMap& cmap) {
  std::string out = "edge_u,edge_v,weight,rho,kappa\n";
  for (EdgeIndex e = 0; e < g.num_edges(); ++e) {
    append_edge(out, g, e);
    out += ',' + format_double(g.weight(e)) + ',' + format_double(cmap.rho[e]) + ',' +
           format_double(cmap.kappa[e]) + '\n';
  }
  return out;
}

std::string histogram_csv(std::span<const double> values, std::size_t bins) {
  if (bins == 0) throw Error(ErrorCode::InvalidConfig, "histogram needs at least one bin");
  std::string out = "bin_lo,bin_hi,count\n";
  if (values.empty()) return out;
  const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
  double lo = *lo_it;
  double hi = *hi_it;
  if (hi <= lo) {
    lo -= 0.5;
    hi += 0.5;
  }
  const double width = (hi - lo) / static_cast<double>(bins);
  std::vector<std::size_t> counts(bins, 0);
  for (double v : values) {
    auto b = static_cast<std::size_t>(std::floor((v - lo) / width));
    counts[std::min(b, bins - 1)] += 1;
  }
  for (std::size_t b = 0; b < bins; ++b) {
    const double b_lo = lo + width * static_cast<double>(b);
    const double b_hi = b + 1 == bins ? hi : lo + width * static_cast<double>(b + 1);
    out += format_double(b_lo) + ',' + format_double(b_hi) + ',' + std::to_string(counts[b]) + '\n';
  }
  return out;
}

std::string trajectory_csv(const WeightedGraph& g, const FlowTrajectory& traj) {
  std::string out = "step,edge_u,edge_v,weight,kappa,rho\n";
  for (std::size_t n = 0; n < traj.steps.size(); ++n) {
    const FlowStep& s = traj.steps[n];
    for (EdgeIndex e = 0; e < s.weights.size(); ++e) {
      out += std::to_string(n) + ',';
      append_edge(out, g, e);
      out += ',' + format_double(s.weights[e] * traj.scale) + ',' +
             (s.kappa.empty() ? std::string() : format_double(s.kappa[e])) + ',' +
             format_double(s.rho[e] * traj.scale) + '\n';
    }
  }
  return out;
}

std::string bad_edges_csv(const WeightedGraph& g, const BadEdgeReport& report) {
  std::string out = "edge_u,edge_v,first_step,condition\n";
  for (const BadEdgeEvent& ev : report.events) {
    append_edge(out, g, ev.edge);
    out += ',' + std::to_string(ev.first_step) + ',' + std::string(condition_name(ev.condition)) + '\n';
  }
  return out;
}

std::string suite_csv(const BenchResults& results) {
  std::string out = "suite,param,method,metric,mean,stddev\n";
  for (const BenchAggregate& a : results.aggregates) {
    out += results.suite + ',' + a.param + ',' + a.method + ',' + a.metric + ',' + format_double(a.mean) + ',' +
           format_double(a.stddev) + '\n';
  }
  return out;
}

std::string suite_runs_csv(const BenchResults& results) {
  std::string out = "suite,param,method,repetition,seed,components,Q,ARI,NMI,error\n";
  for (const BenchRun& r : results.runs) {
    std::string err = r.error.value_or("");
    std::replace(err.begin(), err.end(), ',', ';');
    out += results.suite + ',' + r.param + ',' + r.method + ',' + std::to_string(r.repetition) + ',' +
           std::to_string(r.seed) + ',' + std::to_string(r.components) + ',' + format_double(r.q) + ',' +
           format_double(r.ari) + ',' + format_double(r.nmi) + ',' + err + '\n';
  }
  return out;
}

}  // namespace ricci
