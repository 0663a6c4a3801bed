#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "netee/rng.hpp"
#include "netee/topology.hpp"

using namespace netee;

TEST_CASE("moore neighborhood of an interior cell has 8 members") {
  GridTopology g(5, 5);
  const auto nbrs = g.moore_neighbors(g.id(2, 2));
  CHECK(nbrs.size() == 8);
  CHECK(std::is_sorted(nbrs.begin(), nbrs.end()));
}

TEST_CASE("moore neighborhood truncates at borders") {
  GridTopology g(5, 5);
  const auto corner = g.moore_neighbors(g.id(0, 0));
  CHECK(corner == std::vector<NodeId>{g.id(0, 1), g.id(1, 0), g.id(1, 1)});
  const auto edge = g.moore_neighbors(g.id(0, 2));
  CHECK(edge.size() == 5);
}

TEST_CASE("1x1 grid has no neighbors") {
  GridTopology g(1, 1);
  CHECK(g.moore_neighbors(0).empty());
}

TEST_CASE("grid rejects out-of-range ids and degenerate dims") {
  GridTopology g(3, 4);
  CHECK_THROWS_AS(g.moore_neighbors(12), std::out_of_range);
  CHECK_THROWS_AS(GridTopology(0, 3), std::invalid_argument);
}

TEST_CASE("moore neighborhood sizes are always 3, 5 or 8") {
  Rng rng = Rng::from_seed(31);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t rows = 2 + rng.uniform_index(8);
    const std::size_t cols = 2 + rng.uniform_index(8);
    GridTopology g(rows, cols);
    for (NodeId n = 0; n < g.node_count(); ++n) {
      const std::size_t size = g.moore_neighbors(n).size();
      CHECK((size == 3 || size == 5 || size == 8));
    }
  }
}

TEST_CASE("neighborhoods are symmetric and duplicate free") {
  Rng rng = Rng::from_seed(33);
  GridTopology grid(4, 6);
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId a = 0; a < 9; ++a)
    for (NodeId b = a + 1; b < 9; ++b)
      if (rng.uniform01() < 0.3) edges.emplace_back(a, b);
  GraphTopology graph(9, edges);

  for (const Topology& topo : {Topology(grid), Topology(graph)}) {
    for (NodeId a = 0; a < topo.node_count(); ++a) {
      const auto nbrs = topo.neighbors(a);
      CHECK(std::set<NodeId>(nbrs.begin(), nbrs.end()).size() == nbrs.size());
      for (NodeId b : nbrs) {
        const auto back = topo.neighbors(b);
        CHECK(std::find(back.begin(), back.end(), a) != back.end());
      }
    }
  }
}

TEST_CASE("graph neighbors are sorted 1-hop lists") {
  GraphTopology path(3, {{0, 1}, {1, 2}});
  CHECK(path.neighbors(1) == std::vector<NodeId>{0, 2});

  GraphTopology k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  CHECK(k4.neighbors(0) == std::vector<NodeId>{1, 2, 3});

  GraphTopology lonely(2, {});
  CHECK(lonely.neighbors(0).empty());
  CHECK_THROWS_AS(lonely.neighbors(5), std::out_of_range);
}

TEST_CASE("graph construction validates edges") {
  CHECK_THROWS_AS(GraphTopology(3, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(GraphTopology(3, {{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(GraphTopology(3, {{0, 5}}), std::invalid_argument);
}

TEST_CASE("topology files parse with comments and validation") {
  {
    std::istringstream in("3\n0 1\n1 2\n");
    const GraphTopology g = parse_topology(in);
    CHECK(g.node_count() == 3);
    CHECK(g.neighbors(1) == std::vector<NodeId>{0, 2});
  }
  {
    std::istringstream in("# room layout\n4  # nodes\n0 1\n\n0 2\n0 3\n");
    const GraphTopology g = parse_topology(in);
    CHECK(g.node_count() == 4);
    CHECK(g.neighbors(0).size() == 3);
  }
  {
    std::istringstream in("4\n0 0\n");
    CHECK_THROWS_WITH_AS(parse_topology(in), doctest::Contains("self-loop"),
                         std::runtime_error);
  }
  {
    std::istringstream in("3\n0 1\n0 1\n");
    CHECK_THROWS_WITH_AS(parse_topology(in), doctest::Contains("duplicate"),
                         std::runtime_error);
  }
  {
    std::istringstream in("3\n0 7\n");
    CHECK_THROWS_WITH_AS(parse_topology(in), doctest::Contains("line 2"),
                         std::runtime_error);
  }
  {
    std::istringstream in("2\n0 1 9\n");
    CHECK_THROWS_AS(parse_topology(in), std::runtime_error);
  }
  {
    std::istringstream in("# nothing\n");
    CHECK_THROWS_AS(parse_topology(in), std::runtime_error);
  }
}

TEST_CASE("disconnected graphs only warn") {
  std::istringstream in("4\n0 1\n2 3\n");
  std::string warnings;
  const GraphTopology g = parse_topology(in, &warnings);
  CHECK(g.node_count() == 4);
  CHECK(warnings.find("not connected") != std::string::npos);
}

TEST_CASE("bundled room topologies load") {
  std::string warnings;
  const GraphTopology room_a = load_topology(NETEE_DATA_DIR "/topologies/room_a.txt",
                                             &warnings);
  CHECK(room_a.node_count() == 4);
  CHECK(room_a.neighbors(0).size() == 3);  // hub of the star

  const GraphTopology room_b = load_topology(NETEE_DATA_DIR "/topologies/room_b.txt");
  CHECK(room_b.node_count() == 3);
  CHECK(room_b.neighbors(1) == std::vector<NodeId>{0, 2});

  const GraphTopology room_c = load_topology(NETEE_DATA_DIR "/topologies/room_c.txt");
  CHECK(room_c.node_count() == 5);
  CHECK(room_c.edge_count() == 6);  // cycle plus one chord
  CHECK(room_c.is_connected());
  CHECK(warnings.empty());
}
