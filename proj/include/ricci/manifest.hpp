#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ricci/flow.hpp"
#include "ricci/surgery.hpp"

namespace ricci {

struct RunManifest {
  std::string command;
  std::string dataset;
  std::optional<std::string> truth;
  FlowConfig flow;
  SweepOptions sweep;
  std::vector<std::uint64_t> seeds;
  std::map<std::string, std::string> extra;
  std::map<std::string, double> timings;

  // Everything except timings, as canonical JSON.
  std::string config_json() const;
  std::string to_json() const;
};

std::string toolkit_version();

}  // namespace ricci
