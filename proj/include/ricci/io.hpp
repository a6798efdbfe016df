#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ricci/graph.hpp"

namespace ricci {

struct DatasetStats {
  std::size_t nodes = 0;
  std::size_t edges = 0;
  double average_degree = 0.0;
  double density = 0.0;
  // Largest hop distance over connected pairs.
  std::size_t diameter = 0;
  std::size_t components = 0;
};

struct Dataset {
  std::string name;
  WeightedGraph graph;
  std::optional<Partition> truth;
  DatasetStats stats;
};

// `u v [w]` per line, `#` starts a comment, missing w is 1.0.
std::vector<EdgeTriple> parse_edge_list(std::string_view text, const std::string& source = "<text>");

// `node label` per line; every graph node must be labelled exactly once.
Partition parse_labels(std::string_view text, const WeightedGraph& g, const std::string& source = "<text>");

DatasetStats dataset_stats(const WeightedGraph& g);

Dataset load_dataset(const std::string& edge_path, const std::optional<std::string>& label_path = std::nullopt);
Dataset load_fixture(const std::string& name);

// A fixture name or a file path; truth may be a path, a fixture name, or
// `<fixture>.labels`. Fixtures carry their own truth when none is given.
Dataset resolve_dataset(const std::string& data, const std::optional<std::string>& truth = std::nullopt);

std::string read_file(const std::string& path);
// Writes to a temporary sibling and renames it into place.
void write_file_atomic(const std::string& path, std::string_view content);

}  // namespace ricci
