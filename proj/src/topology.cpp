#include "netee/topology.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace netee {

GridTopology::GridTopology(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols) {
  if (rows == 0 || cols == 0)
    throw std::invalid_argument("grid dimensions must be >= 1");
}

std::pair<std::size_t, std::size_t> GridTopology::coords(NodeId n) const {
  if (n >= node_count())
    throw std::out_of_range("node id " + std::to_string(n) + " out of range");
  return {n / cols_, n % cols_};
}

std::vector<NodeId> GridTopology::moore_neighbors(NodeId n) const {
  const auto [i, j] = coords(n);
  std::vector<NodeId> out;
  out.reserve(8);
  for (int di = -1; di <= 1; ++di) {
    for (int dj = -1; dj <= 1; ++dj) {
      if (di == 0 && dj == 0) continue;
      const long long ni = static_cast<long long>(i) + di;
      const long long nj = static_cast<long long>(j) + dj;
      if (ni < 0 || nj < 0 || ni >= static_cast<long long>(rows_) ||
          nj >= static_cast<long long>(cols_))
        continue;
      out.push_back(id(static_cast<std::size_t>(ni), static_cast<std::size_t>(nj)));
    }
  }
  return out;
}

GraphTopology::GraphTopology(std::size_t node_count,
                             const std::vector<std::pair<NodeId, NodeId>>& edges)
    : adjacency_(node_count) {
  if (node_count == 0) throw std::invalid_argument("node count must be >= 1");
  std::set<std::pair<NodeId, NodeId>> seen;
  for (const auto& [a, b] : edges) {
    if (a == b)
      throw std::invalid_argument("self-loop on node " + std::to_string(a));
    if (a >= node_count || b >= node_count)
      throw std::invalid_argument("edge endpoint out of range: " +
                                  std::to_string(a) + " " + std::to_string(b));
    const auto key = std::minmax(a, b);
    if (!seen.insert(key).second)
      throw std::invalid_argument("duplicate edge: " + std::to_string(a) + " " +
                                  std::to_string(b));
    adjacency_[a].push_back(b);
    adjacency_[b].push_back(a);
    ++edge_count_;
  }
  for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());
}

const std::vector<NodeId>& GraphTopology::neighbors(NodeId n) const {
  if (n >= adjacency_.size())
    throw std::out_of_range("node id " + std::to_string(n) + " out of range");
  return adjacency_[n];
}

bool GraphTopology::is_connected() const {
  std::vector<bool> visited(adjacency_.size(), false);
  std::vector<NodeId> stack{0};
  visited[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const NodeId n = stack.back();
    stack.pop_back();
    for (NodeId m : adjacency_[n]) {
      if (!visited[m]) {
        visited[m] = true;
        ++count;
        stack.push_back(m);
      }
    }
  }
  return count == adjacency_.size();
}

GraphTopology parse_topology(std::istream& in, std::string* warnings) {
  std::string line;
  std::size_t line_no = 0;
  bool have_count = false;
  std::size_t node_count = 0;
  std::vector<std::pair<NodeId, NodeId>> edges;

  auto fail = [&](const std::string& msg) {
    throw std::runtime_error("topology line " + std::to_string(line_no) + ": " + msg);
  };

  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    if (!have_count) {
      long long count = 0;
      if (!(ls >> count)) {
        std::string tok;
        if (ls.clear(), ls.str(line), ls >> tok) fail("expected node count");
        continue;  // blank / comment-only line before the header
      }
      std::string extra;
      if (ls >> extra) fail("unexpected token after node count: '" + extra + "'");
      if (count < 1) fail("node count must be >= 1");
      node_count = static_cast<std::size_t>(count);
      have_count = true;
      continue;
    }
    long long a = 0, b = 0;
    if (!(ls >> a)) continue;  // blank line
    if (!(ls >> b)) fail("expected edge 'a b'");
    std::string extra;
    if (ls >> extra) fail("unexpected token after edge: '" + extra + "'");
    if (a < 0 || b < 0) fail("negative node id");
    if (a == b) fail("self-loop on node " + std::to_string(a));
    if (a >= static_cast<long long>(node_count) ||
        b >= static_cast<long long>(node_count))
      fail("edge endpoint out of range");
    const auto key = std::minmax(static_cast<NodeId>(a), static_cast<NodeId>(b));
    for (const auto& e : edges)
      if (std::minmax(e.first, e.second) == key)
        fail("duplicate edge " + std::to_string(a) + " " + std::to_string(b));
    edges.emplace_back(static_cast<NodeId>(a), static_cast<NodeId>(b));
  }
  if (!have_count) throw std::runtime_error("topology: missing node count line");

  GraphTopology g(node_count, edges);
  if (warnings && !g.is_connected()) *warnings += "graph is not connected\n";
  return g;
}

GraphTopology load_topology(const std::filesystem::path& file, std::string* warnings) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot open topology file: " + file.string());
  try {
    return parse_topology(in, warnings);
  } catch (const std::exception& e) {
    throw std::runtime_error(file.string() + ": " + e.what());
  }
}

std::vector<NodeId> Topology::neighbors(NodeId n) const {
  return is_grid_ ? grid_.moore_neighbors(n) : graph_.neighbors(n);
}

const GridTopology& Topology::grid() const {
  if (!is_grid_) throw std::logic_error("topology is not a grid");
  return grid_;
}

const GraphTopology& Topology::graph() const {
  if (is_grid_) throw std::logic_error("topology is not a graph");
  return graph_;
}

}  // namespace netee
