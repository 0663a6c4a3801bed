#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <string>
#include <utility>
#include <vector>

namespace netee {

using NodeId = std::size_t;

/// Rectangular grid of agents; node ids are row-major flattened.
class GridTopology {
 public:
  GridTopology(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t node_count() const { return rows_ * cols_; }

  NodeId id(std::size_t i, std::size_t j) const { return i * cols_ + j; }
  std::pair<std::size_t, std::size_t> coords(NodeId n) const;

  /// Horizontal, vertical and diagonal in-bounds neighbors, ascending id order.
  std::vector<NodeId> moore_neighbors(NodeId n) const;

 private:
  std::size_t rows_;
  std::size_t cols_;
};

/// Irregular network given as an undirected edge list.
class GraphTopology {
 public:
  GraphTopology(std::size_t node_count,
                const std::vector<std::pair<NodeId, NodeId>>& edges);

  std::size_t node_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  /// 1-hop neighbors, sorted ascending.
  const std::vector<NodeId>& neighbors(NodeId n) const;

  bool is_connected() const;

 private:
  std::vector<std::vector<NodeId>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// Parses the topology text format: first non-comment line is the node count,
/// each following line is an edge "a b". '#' starts a comment. Emits a warning
/// line on `warnings` when the graph is not connected.
GraphTopology parse_topology(std::istream& in, std::string* warnings = nullptr);
GraphTopology load_topology(const std::filesystem::path& file,
                            std::string* warnings = nullptr);

/// Either a grid with Moore neighborhoods or an explicit graph.
class Topology {
 public:
  explicit Topology(GridTopology grid) : grid_(std::move(grid)), is_grid_(true) {}
  explicit Topology(GraphTopology graph)
      : graph_(std::move(graph)), is_grid_(false) {}

  std::size_t node_count() const {
    return is_grid_ ? grid_.node_count() : graph_.node_count();
  }
  std::vector<NodeId> neighbors(NodeId n) const;

  bool is_grid() const { return is_grid_; }
  const GridTopology& grid() const;
  const GraphTopology& graph() const;

 private:
  GridTopology grid_{1, 1};
  GraphTopology graph_{1, {}};
  bool is_grid_;
};

}  // namespace netee
