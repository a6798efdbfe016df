#include "ricci/io.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <map>
#include <queue>
#include <sstream>
#include <unistd.h>

#include "ricci/error.hpp"
#include "ricci/fixtures.hpp"

namespace ricci {

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

template <typename Fn>
void for_each_line(std::string_view text, Fn fn) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tokens = split_tokens(line);
    if (!tokens.empty()) fn(line_no, tokens);
    if (end == text.size()) break;
    pos = end + 1;
  }
}

}  // namespace

std::vector<EdgeTriple> parse_edge_list(std::string_view text, const std::string& source) {
  std::vector<EdgeTriple> triples;
  for_each_line(text, [&](std::size_t line_no, const std::vector<std::string_view>& tok) {
    const std::string where = source + ":" + std::to_string(line_no);
    if (tok.size() < 2 || tok.size() > 3) {
      throw Error(ErrorCode::ParseError, where + ": expected `u v [w]`");
    }
    EdgeTriple t{std::string(tok[0]), std::string(tok[1]), 1.0};
    if (tok.size() == 3) {
      const auto [ptr, ec] = std::from_chars(tok[2].data(), tok[2].data() + tok[2].size(), t.w);
      if (ec != std::errc() || ptr != tok[2].data() + tok[2].size()) {
        throw Error(ErrorCode::ParseError, where + ": weight '" + std::string(tok[2]) + "' is not a number");
      }
    }
    triples.push_back(std::move(t));
  });
  return triples;
}

Partition parse_labels(std::string_view text, const WeightedGraph& g, const std::string& source) {
  std::vector<int> labels(g.num_nodes(), -1);
  std::map<std::string, int> ids;
  for_each_line(text, [&](std::size_t line_no, const std::vector<std::string_view>& tok) {
    const std::string where = source + ":" + std::to_string(line_no);
    if (tok.size() != 2) throw Error(ErrorCode::ParseError, where + ": expected `node label`");
    const auto node = g.find_node(std::string(tok[0]));
    if (!node) throw Error(ErrorCode::UnknownLabelNode, where + ": node '" + std::string(tok[0]) + "'");
    if (labels[*node] != -1) throw Error(ErrorCode::ParseError, where + ": node labelled twice");
    auto [it, inserted] = ids.emplace(std::string(tok[1]), static_cast<int>(ids.size()));
    labels[*node] = it->second;
  });
  for (NodeIndex x = 0; x < labels.size(); ++x) {
    if (labels[x] == -1) throw Error(ErrorCode::UnlabeledNode, source + ": node '" + g.node_name(x) + "'");
  }
  return Partition(labels);
}

DatasetStats dataset_stats(const WeightedGraph& g) {
  DatasetStats s;
  s.nodes = g.num_nodes();
  s.edges = g.num_edges();
  if (s.nodes > 0) s.average_degree = 2.0 * static_cast<double>(s.edges) / static_cast<double>(s.nodes);
  if (s.nodes > 1) {
    s.density = 2.0 * static_cast<double>(s.edges) / (static_cast<double>(s.nodes) * static_cast<double>(s.nodes - 1));
  }
  s.components = connected_components(g).num_communities();
  std::vector<std::size_t> hops(s.nodes);
  for (NodeIndex src = 0; src < s.nodes; ++src) {
    std::fill(hops.begin(), hops.end(), static_cast<std::size_t>(-1));
    std::queue<NodeIndex> q;
    hops[src] = 0;
    q.push(src);
    while (!q.empty()) {
      const NodeIndex x = q.front();
      q.pop();
      s.diameter = std::max(s.diameter, hops[x]);
      for (const Adjacent& a : g.neighbors(x)) {
        if (hops[a.node] == static_cast<std::size_t>(-1)) {
          hops[a.node] = hops[x] + 1;
          q.push(a.node);
        }
      }
    }
  }
  return s;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file_atomic(const std::string& path, std::string_view content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  if (target.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(target.parent_path(), ec);
  }
  const fs::path tmp = target.string() + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::IoError, "cannot write '" + tmp.string() + "'");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw Error(ErrorCode::IoError, "short write to '" + tmp.string() + "'");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw Error(ErrorCode::IoError, "cannot rename into '" + path + "'");
  }
}

Dataset load_dataset(const std::string& edge_path, const std::optional<std::string>& label_path) {
  Dataset ds;
  ds.name = edge_path;
  const auto triples = parse_edge_list(read_file(edge_path), edge_path);
  ds.graph = WeightedGraph::build(triples);
  if (label_path) ds.truth = parse_labels(read_file(*label_path), ds.graph, *label_path);
  ds.stats = dataset_stats(ds.graph);
  return ds;
}

Dataset load_fixture(const std::string& name) {
  const Fixture* f = find_fixture(name);
  if (!f) throw Error(ErrorCode::IoError, "no fixture named '" + name + "'");
  Dataset ds;
  ds.name = name;
  ds.graph = WeightedGraph::build(parse_edge_list(f->edges, name + ".edges"));
  if (f->labels) ds.truth = parse_labels(f->labels, ds.graph, name + ".labels");
  ds.stats = dataset_stats(ds.graph);
  return ds;
}

Dataset resolve_dataset(const std::string& data, const std::optional<std::string>& truth) {
  namespace fs = std::filesystem;
  Dataset ds;
  if (!fs::exists(data) && find_fixture(data)) {
    ds = load_fixture(data);
  } else {
    ds = load_dataset(data);
  }
  if (!truth) return ds;
  if (fs::exists(*truth)) {
    ds.truth = parse_labels(read_file(*truth), ds.graph, *truth);
    return ds;
  }
  std::string name = *truth;
  if (name.size() > 7 && name.ends_with(".labels")) name.resize(name.size() - 7);
  const Fixture* f = find_fixture(name);
  if (!f || !f->labels) throw Error(ErrorCode::IoError, "cannot open '" + *truth + "'");
  ds.truth = parse_labels(f->labels, ds.graph, name + ".labels");
  return ds;
}

}  // namespace ricci
