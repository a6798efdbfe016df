#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ricci/curvature.hpp"
#include "ricci/error.hpp"
#include "ricci/flow.hpp"
#include "ricci/io.hpp"
#include "ricci/manifest.hpp"
#include "ricci/metrics.hpp"
#include "ricci/report.hpp"
#include "ricci/sbm.hpp"
#include "ricci/surgery.hpp"

namespace {

using namespace ricci;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// ============================================================================
// Shared options
// ============================================================================

struct Options {
  std::string data;
  std::optional<std::string> truth;
  std::string variant = "rhon";
  double step = 0.1;
  std::size_t iters = 30;
  double alpha = 0.5;
  double gamma = 1.0;
  double cutoff_step = 0.01;
  double merge_threshold = 1e-3;
  bool enforce_bounds = false;
  bool no_enforce_bounds = false;
  std::string score_on = "original";
  std::uint64_t seed = 0;
  std::string out = ".";

  bool histogram = false;
  std::size_t bins = 20;

  std::size_t n = 500;
  std::size_t k = 2;
  double p_intra = 0.15;
  double p_inter = 0.01;

  std::string suite = "D1";
  std::size_t reps = 10;
  std::vector<std::string> methods;
};

void add_data(CLI::App* cmd, Options& o) {
  cmd->add_option("--data", o.data, "Edge list path or fixture name")->required();
  cmd->add_option("--truth", o.truth, "Label file path or fixture name");
}

void add_flow(CLI::App* cmd, Options& o) {
  cmd->add_option("--variant", o.variant, "rho|rhon|dorf|ndorf")
      ->check(CLI::IsMember({"rho", "rhon", "dorf", "ndorf"}))
      ->capture_default_str();
  cmd->add_option("--step", o.step, "Step size s")->capture_default_str();
  cmd->add_option("--iters", o.iters, "Iterations T")->capture_default_str();
  cmd->add_option("--alpha", o.alpha, "Laziness for dorf/ndorf")->capture_default_str();
  cmd->add_option("--merge-threshold", o.merge_threshold, "Bad-edge weight floor mt")->capture_default_str();
  auto* on = cmd->add_flag("--enforce-bounds", o.enforce_bounds, "Reject steps outside the admissible range");
  cmd->add_flag("--no-enforce-bounds", o.no_enforce_bounds, "Allow any positive step (default for all but rho)")
      ->excludes(on);
}

void add_sweep(CLI::App* cmd, Options& o) {
  cmd->add_option("--gamma", o.gamma, "Modularity resolution")->capture_default_str();
  cmd->add_option("--cutoff-step", o.cutoff_step, "Surgery cutoff decrement")->capture_default_str();
  cmd->add_option("--score-on", o.score_on, "original|surgered")
      ->check(CLI::IsMember({"original", "surgered"}))
      ->capture_default_str();
}

void add_out(CLI::App* cmd, Options& o) {
  cmd->add_option("--out", o.out, "Output directory")->capture_default_str();
}

FlowConfig flow_config(const Options& o) {
  FlowConfig cfg;
  cfg.variant = parse_variant(o.variant);
  cfg.step = o.step;
  cfg.iterations = o.iters;
  cfg.alpha = o.alpha;
  cfg.merge_threshold = o.merge_threshold;
  if (o.enforce_bounds) cfg.enforce_theoretical_step = true;
  if (o.no_enforce_bounds) cfg.enforce_theoretical_step = false;
  return cfg;
}

SweepOptions sweep_options(const Options& o) {
  SweepOptions s;
  s.step = o.cutoff_step;
  s.gamma = o.gamma;
  s.score_on = parse_score_on(o.score_on);
  return s;
}

RunManifest base_manifest(const std::string& command, const Options& o) {
  RunManifest m;
  m.command = command;
  m.dataset = o.data;
  m.truth = o.truth;
  m.flow = flow_config(o);
  m.sweep = sweep_options(o);
  return m;
}

std::string out_path(const Options& o, const std::string& name) {
  return (std::filesystem::path(o.out) / name).string();
}

void prepare_out(const Options& o) {
  std::error_code ec;
  std::filesystem::create_directories(o.out, ec);
  if (ec) throw Error(ErrorCode::IoError, "cannot create " + o.out + ": " + ec.message());
}

void emit(const Options& o, const std::string& name, std::string_view content) {
  write_file_atomic(out_path(o, name), content);
}

nlohmann::ordered_json stats_json(const DatasetStats& s) {
  nlohmann::ordered_json j;
  j["nodes"] = s.nodes;
  j["edges"] = s.edges;
  j["average_degree"] = s.average_degree;
  j["density"] = s.density;
  j["diameter"] = s.diameter;
  j["components"] = s.components;
  return j;
}

void print_stats(const Dataset& d) {
  const DatasetStats& s = d.stats;
  std::cout << d.name << ": nodes=" << s.nodes << " edges=" << s.edges
            << " avg_degree=" << format_double(s.average_degree) << " density=" << format_double(s.density)
            << " diameter=" << s.diameter << " components=" << s.components << "\n";
}

nlohmann::ordered_json optional_json(const std::optional<double>& v) {
  return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

// ============================================================================
// Commands
// ============================================================================

int cmd_detect(const Options& o) {
  const auto t0 = Clock::now();
  RunManifest manifest = base_manifest("detect", o);
  const Dataset d = resolve_dataset(o.data, o.truth);
  print_stats(d);
  manifest.timings["load"] = seconds_since(t0);

  const auto t1 = Clock::now();
  const FlowResult flow = run_flow(d.graph, manifest.flow);
  manifest.timings["flow"] = seconds_since(t1);

  const auto t2 = Clock::now();
  const Partition* truth = d.truth ? &*d.truth : nullptr;
  const SweepReport report = sweep(flow.graph, d.graph, truth, manifest.sweep);
  manifest.timings["sweep"] = seconds_since(t2);

  prepare_out(o);
  emit(o, "sweep.csv", sweep_csv(report));
  emit(o, "partition.txt", partition_text(d.graph, best_partition(report, Criterion::Modularity)));
  if (truth) emit(o, "partition_ari.txt", partition_text(d.graph, best_partition(report, Criterion::Ari)));
  emit(o, "flowed.edges", edge_list_text(flow.graph));

  nlohmann::ordered_json summary;
  summary["dataset"] = d.name;
  summary["stats"] = stats_json(d.stats);
  summary["records"] = report.records.size();
  summary["w_max"] = report.w_max;
  summary["w_min"] = report.w_min;
  summary["peak_q"] = report.peak_q();
  summary["peak_ari"] = optional_json(report.peak_ari());
  summary["peak_nmi"] = optional_json(report.peak_nmi());
  const SweepRecord& best = report.records[report.best_by_q];
  summary["best_by_q"] = {{"cutoff", best.cutoff},
                          {"communities", best.components},
                          {"q", best.modularity},
                          {"ari", optional_json(best.ari)},
                          {"nmi", optional_json(best.nmi)}};
  if (report.best_by_ari) {
    const SweepRecord& r = report.records[*report.best_by_ari];
    summary["best_by_ari"] = {{"cutoff", r.cutoff},
                              {"communities", r.components},
                              {"q", r.modularity},
                              {"ari", optional_json(r.ari)},
                              {"nmi", optional_json(r.nmi)}};
  }
  emit(o, "summary.json", summary.dump(2) + "\n");
  manifest.timings["total"] = seconds_since(t0);
  emit(o, "manifest.json", manifest.to_json());

  std::cout << "peak Q=" << format_double(report.peak_q());
  if (report.peak_ari()) std::cout << " ARI=" << format_double(*report.peak_ari());
  if (report.peak_nmi()) std::cout << " NMI=" << format_double(*report.peak_nmi());
  std::cout << "\n";
  return 0;
}

int cmd_curvature(const Options& o) {
  const auto t0 = Clock::now();
  RunManifest manifest = base_manifest("curvature", o);
  manifest.extra["bins"] = std::to_string(o.bins);
  const Dataset d = resolve_dataset(o.data, o.truth);
  print_stats(d);

  const FlowConfig cfg = manifest.flow;
  const bool ollivier = cfg.variant == FlowVariant::Dorf || cfg.variant == FlowVariant::Ndorf;
  const CurvatureKind kind = ollivier ? CurvatureKind::Ollivier : CurvatureKind::StarCoupling;
  manifest.extra["curvature"] = ollivier ? "ollivier" : "star_coupling";

  WeightedGraph g = d.graph;
  if (o.iters > 0) {
    FlowConfig c = cfg;
    c.final_curvature = false;
    g = run_flow(d.graph, c).graph;
  }
  const CurvatureMap cmap = curvature_map(g, kind, cfg.alpha);
  manifest.timings["compute"] = seconds_since(t0);

  prepare_out(o);
  emit(o, "curvature.csv", curvature_csv(g, cmap));
  if (o.histogram) {
    emit(o, "kappa_histogram.csv", histogram_csv(cmap.kappa, o.bins));
    emit(o, "weight_histogram.csv", histogram_csv(g.weights(), o.bins));
  }
  manifest.timings["total"] = seconds_since(t0);
  emit(o, "manifest.json", manifest.to_json());

  double lo = cmap.kappa.front();
  double hi = lo;
  for (double k : cmap.kappa) {
    lo = std::min(lo, k);
    hi = std::max(hi, k);
  }
  std::cout << "edges=" << cmap.kappa.size() << " kappa_min=" << format_double(lo)
            << " kappa_max=" << format_double(hi) << "\n";
  return 0;
}

int cmd_flow(const Options& o) {
  const auto t0 = Clock::now();
  RunManifest manifest = base_manifest("flow", o);
  const Dataset d = resolve_dataset(o.data, o.truth);
  print_stats(d);
  const FlowResult flow = run_flow(d.graph, manifest.flow);
  manifest.timings["flow"] = seconds_since(t0);

  prepare_out(o);
  emit(o, "trajectory.csv", trajectory_csv(d.graph, flow.trajectory));
  emit(o, "flowed.edges", edge_list_text(flow.graph));
  manifest.timings["total"] = seconds_since(t0);
  emit(o, "manifest.json", manifest.to_json());

  const auto w = flow.graph.weights();
  const auto [lo, hi] = std::minmax_element(w.begin(), w.end());
  std::cout << "steps=" << flow.trajectory.steps.size() - 1 << " w_min=" << format_double(*lo)
            << " w_max=" << format_double(*hi) << "\n";
  return 0;
}

int cmd_badedges(const Options& o) {
  const auto t0 = Clock::now();
  RunManifest manifest = base_manifest("badedges", o);
  const Dataset d = resolve_dataset(o.data, o.truth);
  print_stats(d);
  const FlowResult flow = run_flow(d.graph, manifest.flow);
  const BadEdgeReport report = detect_bad_edges(flow.trajectory, d.graph, manifest.flow.merge_threshold);
  manifest.timings["compute"] = seconds_since(t0);

  prepare_out(o);
  emit(o, "bad_edges.csv", bad_edges_csv(d.graph, report));
  nlohmann::ordered_json summary;
  summary["dataset"] = d.name;
  summary["edges"] = report.num_edges;
  summary["flagged"] = report.flagged;
  summary["condition_I"] = report.overlong;
  summary["condition_II"] = report.below_merge;
  summary["fraction"] = report.fraction();
  summary["merge_threshold"] = report.merge_threshold;
  emit(o, "summary.json", summary.dump(2) + "\n");
  manifest.timings["total"] = seconds_since(t0);
  emit(o, "manifest.json", manifest.to_json());

  std::cout << "bad edges " << report.flagged << " of " << report.num_edges << " (I=" << report.overlong
            << ", II=" << report.below_merge << ")\n";
  return 0;
}

int cmd_sbm(const Options& o) {
  const auto t0 = Clock::now();
  RunManifest manifest = base_manifest("sbm", o);
  manifest.dataset = "sbm";
  manifest.seeds = {o.seed};
  manifest.extra["n"] = std::to_string(o.n);
  manifest.extra["k"] = std::to_string(o.k);
  manifest.extra["p_intra"] = format_double(o.p_intra);
  manifest.extra["p_inter"] = format_double(o.p_inter);
  const SbmSample s = sbm_generate({o.n, o.k, o.p_intra, o.p_inter, o.seed});
  manifest.timings["generate"] = seconds_since(t0);

  prepare_out(o);
  emit(o, "graph.edges", edge_list_text(s.graph));
  emit(o, "truth.labels", partition_text(s.graph, s.truth));
  manifest.timings["total"] = seconds_since(t0);
  emit(o, "manifest.json", manifest.to_json());
  std::cout << "nodes=" << s.graph.num_nodes() << " edges=" << s.graph.num_edges()
            << " components=" << s.components << "\n";
  return 0;
}

int cmd_bench(const Options& o) {
  const auto t0 = Clock::now();
  BenchSuite suite = suite_by_name(o.suite);
  suite.repetitions = o.reps;
  suite.seed = o.seed;
  suite.sweep = sweep_options(o);

  std::vector<BenchMethod> methods;
  const std::vector<std::string> names = o.methods.empty() ? std::vector<std::string>{o.variant} : o.methods;
  for (const std::string& name : names) {
    Options copy = o;
    copy.variant = name;
    methods.push_back({name, flow_config(copy)});
  }

  RunManifest manifest = base_manifest("bench", o);
  manifest.dataset = suite.id;
  manifest.seeds = {o.seed};
  manifest.extra["repetitions"] = std::to_string(o.reps);
  std::string joined;
  for (const auto& m : methods) joined += (joined.empty() ? "" : ",") + m.name;
  manifest.extra["methods"] = joined;

  const BenchResults results = run_suite(suite, methods, [](const BenchRun& r) {
    std::cerr << r.param << " " << r.method << " rep " << r.repetition;
    if (r.error) {
      std::cerr << " failed: " << *r.error << "\n";
    } else {
      std::cerr << " Q=" << format_double(r.q) << " ARI=" << format_double(r.ari)
                << " NMI=" << format_double(r.nmi) << "\n";
    }
  });
  manifest.timings["total"] = seconds_since(t0);

  prepare_out(o);
  emit(o, "suite.csv", suite_csv(results));
  emit(o, "suite_runs.csv", suite_runs_csv(results));
  emit(o, "manifest.json", manifest.to_json());
  std::cout << suite_csv(results);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ricci-flow community detection toolkit"};
  app.set_version_flag("--version", ricci::toolkit_version());
  app.require_subcommand(1);
  Options o;

  auto* detect = app.add_subcommand("detect", "Flow, surgery sweep and best partition");
  add_data(detect, o);
  add_flow(detect, o);
  add_sweep(detect, o);
  add_out(detect, o);

  auto* curvature = app.add_subcommand("curvature", "Edge curvature table and histograms");
  add_data(curvature, o);
  add_flow(curvature, o);
  add_out(curvature, o);
  curvature->add_flag("--histogram", o.histogram, "Also write curvature and weight histograms");
  curvature->add_option("--bins", o.bins, "Histogram bins")->capture_default_str();

  auto* flow = app.add_subcommand("flow", "Run a discrete flow and record the trajectory");
  add_data(flow, o);
  add_flow(flow, o);
  add_out(flow, o);

  auto* badedges = app.add_subcommand("badedges", "Count edges that become overlong or fall below mt");
  add_data(badedges, o);
  add_flow(badedges, o);
  add_out(badedges, o);

  auto* sbm = app.add_subcommand("sbm", "Generate a stochastic block model graph");
  sbm->add_option("--n", o.n, "Nodes")->capture_default_str();
  sbm->add_option("--k", o.k, "Blocks")->capture_default_str();
  sbm->add_option("--p-intra", o.p_intra, "Intra-block edge probability")->capture_default_str();
  sbm->add_option("--p-inter", o.p_inter, "Inter-block edge probability")->capture_default_str();
  sbm->add_option("--seed", o.seed, "Generator seed")->capture_default_str();
  add_out(sbm, o);

  auto* bench = app.add_subcommand("bench", "Run a synthetic benchmark suite");
  bench->add_option("--suite", o.suite, "D1|D2")->check(CLI::IsMember({"D1", "D2"}))->capture_default_str();
  bench->add_option("--reps", o.reps, "Repetitions per cell")->capture_default_str();
  bench->add_option("--seed", o.seed, "Suite seed")->capture_default_str();
  bench->add_option("--methods", o.methods, "Variants to compare")
      ->delimiter(',')
      ->check(CLI::IsMember({"rho", "rhon", "dorf", "ndorf"}));
  add_flow(bench, o);
  add_sweep(bench, o);
  add_out(bench, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  // The curvature command looks at the input weights unless --iters is given.
  if (curvature->parsed() && curvature->count("--iters") == 0) o.iters = 0;

  try {
    if (detect->parsed()) return cmd_detect(o);
    if (curvature->parsed()) return cmd_curvature(o);
    if (flow->parsed()) return cmd_flow(o);
    if (badedges->parsed()) return cmd_badedges(o);
    if (sbm->parsed()) return cmd_sbm(o);
    if (bench->parsed()) return cmd_bench(o);
  } catch (const ricci::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: Internal: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
