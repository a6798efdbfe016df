#include "ricci/flow.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "ricci/error.hpp"

namespace ricci {

std::string_view variant_name(FlowVariant v) noexcept {
  switch (v) {
    case FlowVariant::Rho: return "rho";
    case FlowVariant::RhoN: return "rhon";
    case FlowVariant::Dorf: return "dorf";
    case FlowVariant::Ndorf: return "ndorf";
  }
  return "unknown";
}

FlowVariant parse_variant(std::string_view text) {
  if (text == "rho") return FlowVariant::Rho;
  if (text == "rhon") return FlowVariant::RhoN;
  if (text == "dorf") return FlowVariant::Dorf;
  if (text == "ndorf") return FlowVariant::Ndorf;
  throw Error(ErrorCode::InvalidConfig, "unknown flow variant '" + std::string(text) + "'");
}

std::string_view condition_name(BadEdgeCondition c) noexcept {
  return c == BadEdgeCondition::Overlong ? "I" : "II";
}

bool FlowConfig::enforce() const noexcept {
  return enforce_theoretical_step.value_or(variant == FlowVariant::Rho);
}

std::optional<double> theoretical_step_limit(FlowVariant v, std::size_t num_edges) {
  switch (v) {
    case FlowVariant::Rho: return 0.5;
    case FlowVariant::RhoN: return 1.0 / (2.0 * (static_cast<double>(num_edges) + 1.0));
    default: return std::nullopt;
  }
}

void FlowConfig::validate(std::size_t num_edges) const {
  if (!(step > 0.0) || !std::isfinite(step)) throw Error(ErrorCode::InvalidConfig, "step must be positive");
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw Error(ErrorCode::InvalidConfig, "alpha must lie in [0,1]");
  if (!(merge_threshold > 0.0)) throw Error(ErrorCode::InvalidConfig, "merge threshold must be positive");
  if (enforce()) {
    const auto limit = theoretical_step_limit(variant, num_edges);
    if (limit && !(step < *limit)) {
      throw Error(ErrorCode::StepOutOfTheoreticalRange,
                  std::string(variant_name(variant)) + " requires step < " + std::to_string(*limit) +
                      ", got " + std::to_string(step));
    }
  }
}

Bounds theoretical_bounds(const FlowConfig& cfg, std::size_t num_edges, double a0, double b0, std::size_t n) {
  const auto limit = theoretical_step_limit(cfg.variant, num_edges);
  if (!limit) {
    throw Error(ErrorCode::InvalidConfig,
                std::string(variant_name(cfg.variant)) + " has no theoretical weight envelope");
  }
  if (!(cfg.step > 0.0 && cfg.step < *limit)) {
    throw Error(ErrorCode::StepOutOfTheoreticalRange, "step " + std::to_string(cfg.step) + " outside (0, " +
                                                          std::to_string(*limit) + ")");
  }
  if (a0 > b0) throw Error(ErrorCode::InvalidConfig, "a0 exceeds b0");
  const double s = cfg.step;
  const double nn = static_cast<double>(n);
  if (cfg.variant == FlowVariant::Rho) {
    return {a0 * std::pow(1.0 - 2.0 * s, nn), b0 * std::pow(1.0 + 2.0 * s, nn)};
  }
  const double m = static_cast<double>(num_edges);
  return {a0 * std::pow(1.0 - 2.0 * (m + 1.0) * s, nn), b0 * std::pow(1.0 + 4.0 * s, nn)};
}

// ============================================================================
// Single steps
// ============================================================================

namespace {

void check_snapshot(const WeightedGraph& g, const CurvatureMap& cmap, CurvatureKind expected) {
  if (cmap.version != g.version()) {
    throw Error(ErrorCode::StaleSnapshot, "curvature map does not belong to the current weights");
  }
  if (cmap.kind != expected) {
    throw Error(ErrorCode::InvalidConfig, "curvature map kind does not match the flow variant");
  }
  if (cmap.kappa.size() != g.num_edges() || cmap.rho.size() != g.num_edges()) {
    throw Error(ErrorCode::InvalidConfig, "curvature map size does not match the edge count");
  }
}

void check_positive(const WeightedGraph& g, const std::vector<double>& w) {
  for (EdgeIndex e = 0; e < w.size(); ++e) {
    if (!(w[e] > 0.0)) {
      const Edge& ed = g.edge(e);
      throw Error(ErrorCode::NonPositiveWeightProduced, "edge " + std::to_string(e) + " (" +
                                                            g.node_name(ed.u) + "," + g.node_name(ed.v) +
                                                            ") reached " + std::to_string(w[e]));
    }
  }
}

}  // namespace

std::vector<double> step_rho(const WeightedGraph& g, const CurvatureMap& cmap, double s) {
  check_snapshot(g, cmap, CurvatureKind::StarCoupling);
  const auto w = g.weights();
  std::vector<double> out(w.size());
  for (std::size_t e = 0; e < w.size(); ++e) out[e] = w[e] - s * cmap.kappa[e] * cmap.rho[e];
  check_positive(g, out);
  return out;
}

std::vector<double> step_rhon(const WeightedGraph& g, const CurvatureMap& cmap, double s) {
  check_snapshot(g, cmap, CurvatureKind::StarCoupling);
  const auto w = g.weights();
  double sum_kr = 0.0;
  double sum_w = 0.0;
  for (std::size_t e = 0; e < w.size(); ++e) {
    sum_kr += cmap.kappa[e] * cmap.rho[e];
    sum_w += w[e];
  }
  const double ratio = sum_kr / sum_w;
  std::vector<double> out(w.size());
  for (std::size_t e = 0; e < w.size(); ++e) {
    out[e] = w[e] + s * (-cmap.kappa[e] * cmap.rho[e] + ratio * cmap.rho[e]);
  }
  check_positive(g, out);
  return out;
}

std::vector<double> step_dorf(const WeightedGraph& g, const CurvatureMap& cmap, double s) {
  check_snapshot(g, cmap, CurvatureKind::Ollivier);
  std::vector<double> out(g.num_edges());
  for (std::size_t e = 0; e < out.size(); ++e) out[e] = cmap.rho[e] - s * cmap.kappa[e] * cmap.rho[e];
  check_positive(g, out);
  return out;
}

std::vector<double> step_ndorf(const WeightedGraph& g, const CurvatureMap& cmap, double s) {
  check_snapshot(g, cmap, CurvatureKind::Ollivier);
  const auto w = g.weights();
  double sum_kw = 0.0;
  for (std::size_t e = 0; e < w.size(); ++e) sum_kw += cmap.kappa[e] * w[e];
  std::vector<double> out(w.size());
  for (std::size_t e = 0; e < w.size(); ++e) out[e] = w[e] - s * cmap.kappa[e] * w[e] + s * w[e] * sum_kw;
  check_positive(g, out);
  return out;
}

// ============================================================================
// run_flow
// ============================================================================

FlowResult run_flow(const WeightedGraph& g, const FlowConfig& cfg) {
  const std::size_t m = g.num_edges();
  if (m == 0) throw Error(ErrorCode::EmptyGraph, "flow needs at least one edge");
  cfg.validate(m);

  const bool ollivier = cfg.variant == FlowVariant::Dorf || cfg.variant == FlowVariant::Ndorf;
  const CurvatureKind kind = ollivier ? CurvatureKind::Ollivier : CurvatureKind::StarCoupling;

  FlowResult result;
  FlowTrajectory& traj = result.trajectory;
  traj.config = cfg;
  WeightedGraph current = g;
  if (cfg.variant == FlowVariant::Ndorf && cfg.normalize_ndorf) {
    traj.scale = std::accumulate(g.weights().begin(), g.weights().end(), 0.0);
    std::vector<double> w(g.weights().begin(), g.weights().end());
    for (double& x : w) x /= traj.scale;
    current.set_weights(std::move(w));
  }
  const auto w0 = current.weights();
  traj.a0 = *std::min_element(w0.begin(), w0.end());
  traj.b0 = *std::max_element(w0.begin(), w0.end());

  const auto limit = theoretical_step_limit(cfg.variant, m);
  const bool bounded = limit && cfg.step < *limit;
  traj.steps.reserve(cfg.iterations + 1);
  WarmStarts warm;

  for (std::size_t n = 0;; ++n) {
    const DistanceOracle dist(current, true);
    FlowStep step;
    const auto w = current.weights();
    step.weights.assign(w.begin(), w.end());
    step.min_weight = *std::min_element(w.begin(), w.end());
    step.max_weight = *std::max_element(w.begin(), w.end());
    if (bounded) {
      step.bounds = theoretical_bounds(cfg, m, traj.a0, traj.b0, n);
      step.bounds_checked = true;
      const double slack = 1e-12 * std::max(1.0, step.bounds.upper);
      if (step.min_weight < step.bounds.lower - slack || step.max_weight > step.bounds.upper + slack) {
        if (cfg.enforce()) {
          throw Error(ErrorCode::InvariantViolation,
                      "weights left the theoretical envelope at step " + std::to_string(n));
        }
      }
    }

    const bool last = n == cfg.iterations;
    if (last && !cfg.final_curvature) {
      step.rho.resize(m);
      for (EdgeIndex e = 0; e < m; ++e) step.rho[e] = dist.rho(e);
      traj.steps.push_back(std::move(step));
      break;
    }
    const CurvatureMap cmap = curvature_map(current, dist, kind, cfg.alpha, LpBackend::Transport, &warm);
    step.kappa = cmap.kappa;
    step.rho = cmap.rho;
    traj.steps.push_back(std::move(step));
    if (last) break;

    std::vector<double> next;
    try {
      switch (cfg.variant) {
        case FlowVariant::Rho: next = step_rho(current, cmap, cfg.step); break;
        case FlowVariant::RhoN: next = step_rhon(current, cmap, cfg.step); break;
        case FlowVariant::Dorf: next = step_dorf(current, cmap, cfg.step); break;
        case FlowVariant::Ndorf: next = step_ndorf(current, cmap, cfg.step); break;
      }
    } catch (const Error& err) {
      if (err.code() == ErrorCode::NonPositiveWeightProduced && cfg.enforce() && bounded) {
        throw Error(ErrorCode::InvariantViolation, std::string(err.what()) + " under an admissible step");
      }
      throw;
    }
    current.set_weights(std::move(next));
  }

  if (traj.scale != 1.0) {
    std::vector<double> w(current.weights().begin(), current.weights().end());
    for (double& x : w) x *= traj.scale;
    current.set_weights(std::move(w));
  }
  result.graph = std::move(current);
  return result;
}

// ============================================================================
// Bad edges
// ============================================================================

BadEdgeReport detect_bad_edges(const FlowTrajectory& traj, const WeightedGraph& g, double mt) {
  BadEdgeReport report;
  report.num_edges = g.num_edges();
  report.merge_threshold = mt;
  std::vector<std::uint8_t> flagged(report.num_edges, 0);
  for (std::size_t n = 0; n < traj.steps.size(); ++n) {
    const FlowStep& step = traj.steps[n];
    if (step.weights.size() != report.num_edges || step.rho.size() != report.num_edges) {
      throw Error(ErrorCode::InvalidConfig, "trajectory does not match the graph");
    }
    for (EdgeIndex e = 0; e < report.num_edges; ++e) {
      if (flagged[e]) continue;
      const double w = step.weights[e];
      std::optional<BadEdgeCondition> cond;
      if (w > step.rho[e] * (1.0 + 1e-9)) {
        cond = BadEdgeCondition::Overlong;
      } else if (w * traj.scale < mt) {
        cond = BadEdgeCondition::BelowMerge;
      }
      if (!cond) continue;
      flagged[e] = 1;
      report.events.push_back({e, n, *cond});
      if (*cond == BadEdgeCondition::Overlong) ++report.overlong; else ++report.below_merge;
    }
  }
  report.flagged = report.events.size();
  return report;
}

}  // namespace ricci
