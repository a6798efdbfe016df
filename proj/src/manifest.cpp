#include "ricci/manifest.hpp"

#include <json.hpp>

#include "ricci/simd/kernels.hpp"

namespace ricci {

std::string toolkit_version() { return RICCI_VERSION; }

namespace {

nlohmann::ordered_json config_object(const RunManifest& m) {
  nlohmann::ordered_json j;
  j["toolkit_version"] = toolkit_version();
  j["command"] = m.command;
  j["dataset"] = m.dataset;
  j["truth"] = m.truth ? nlohmann::ordered_json(*m.truth) : nlohmann::ordered_json(nullptr);
  j["variant"] = variant_name(m.flow.variant);
  j["step"] = m.flow.step;
  j["iterations"] = m.flow.iterations;
  j["alpha"] = m.flow.alpha;
  j["enforce_theoretical_step"] = m.flow.enforce();
  j["merge_threshold"] = m.flow.merge_threshold;
  j["normalize_ndorf"] = m.flow.normalize_ndorf;
  j["gamma"] = m.sweep.gamma;
  j["cutoff_step"] = m.sweep.step;
  j["score_on"] = score_on_name(m.sweep.score_on);
  j["seeds"] = m.seeds;
  for (const auto& [k, v] : m.extra) j[k] = v;
  return j;
}

}  // namespace

std::string RunManifest::config_json() const { return config_object(*this).dump(2); }

std::string RunManifest::to_json() const {
  nlohmann::ordered_json j = config_object(*this);
  j["simd"] = simd::active_kernels().name;
  j["timings_seconds"] = timings;
  return j.dump(2) + "\n";
}

}  // namespace ricci
