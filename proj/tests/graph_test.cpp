#include "vrank/graph.hpp"

#include <gtest/gtest.h>

#include "test_support.hpp"
#include "vrank/errors.hpp"
#include "vrank/generators.hpp"

namespace vrank {
namespace {

using testing::all_pairs_distance;
using testing::complete_graph;
using testing::cycle_graph;
using testing::make_graph;
using testing::star_graph;

TEST(BuildGraph, Path) {
  const Graph g = make_graph(3, {{0, 1}, {1, 2}});
  EXPECT_EQ(g.num_vertices(), 3);
  EXPECT_EQ(g.num_edges(), 2u);
  EXPECT_TRUE(g.adjacent(1, 0));
  EXPECT_FALSE(g.adjacent(0, 2));
}

TEST(BuildGraph, DuplicateEdgesCollapse) {
  const Graph g = make_graph(3, {{0, 1}, {1, 0}, {1, 2}});
  EXPECT_EQ(g.num_edges(), 2u);
  EXPECT_EQ(g, make_graph(3, {{0, 1}, {1, 2}}));
}

TEST(BuildGraph, RejectsBadEndpoints) {
  EXPECT_THROW(make_graph(2, {{0, 2}}), EndpointOutOfRange);
  EXPECT_THROW(make_graph(2, {{-1, 1}}), EndpointOutOfRange);
  EXPECT_THROW(make_graph(2, {{1, 1}}), SelfLoop);
}

TEST(BuildGraph, AdjacencySortedAndSymmetric) {
  Rng rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = random_gnp(12, 0.4, rng());
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      auto nb = g.neighbors(v);
      EXPECT_TRUE(std::is_sorted(nb.begin(), nb.end()));
      EXPECT_EQ(std::adjacent_find(nb.begin(), nb.end()), nb.end());
      for (Vertex w : nb) {
        EXPECT_NE(w, v);
        EXPECT_TRUE(g.adjacent(w, v));
      }
    }
  }
}

TEST(Degeneracy, Examples) {
  EXPECT_EQ(degeneracy_ordering(star_graph(3)).d, 1);
  EXPECT_EQ(degeneracy_ordering(complete_graph(4)).d, 3);
  EXPECT_EQ(degeneracy_ordering(subdivided_replicated_clique(3)).d, 2);
  EXPECT_EQ(degeneracy_ordering(Graph::from_edges(5, {})).d, 0);
  EXPECT_TRUE(degeneracy_ordering(Graph{}).order.empty());
}

TEST(Degeneracy, TieBreakIsSmallestIndex) {
  // Path 0-1-2: peel 0 (deg 1, smallest), then 1, then 2; reversed.
  const auto ord = degeneracy_ordering(path_graph(3));
  EXPECT_EQ(ord.order, (std::vector<Vertex>{2, 1, 0}));
}

TEST(Degeneracy, OrderingWitnessAndMinimality) {
  Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const auto n = static_cast<Vertex>(1 + uniform_below(rng, 11));
    const Graph g = random_gnp(n, uniform_unit(rng), rng());
    const auto ord = degeneracy_ordering(g);
    ASSERT_EQ(ord.order.size(), static_cast<std::size_t>(n));
    std::vector<int> pos(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < ord.order.size(); ++i) pos[ord.order[i]] = static_cast<int>(i);
    for (Vertex v = 0; v < n; ++v) {
      ASSERT_GE(pos[v], 0);
      int earlier = 0;
      for (Vertex w : g.neighbors(v)) earlier += pos[w] < pos[v];
      EXPECT_LE(earlier, ord.d);
    }
    EXPECT_EQ(ord.d, testing::brute_degeneracy(g));
  }
}

TEST(Degeneracy, RandomSubsetsHaveSmallMinDegree) {
  Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = random_gnp(30, 0.2, rng());
    const int d = degeneracy_ordering(g).d;
    std::vector<Vertex> subset;
    for (Vertex v = 0; v < 30; ++v)
      if (uniform_below(rng, 2)) subset.push_back(v);
    if (subset.empty()) continue;
    const Graph h = induced_subgraph(g, subset).graph;
    int min_deg = h.num_vertices();
    for (Vertex v = 0; v < h.num_vertices(); ++v) min_deg = std::min(min_deg, h.degree(v));
    EXPECT_LE(min_deg, d);
  }
}

TEST(Degeneracy, HighDegreeCountBound) {
  // |{v : deg(v) >= d}| <= 2m / d.
  Rng rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = random_gnp(25, uniform_unit(rng), rng());
    for (int d = 1; d <= 24; ++d) {
      std::size_t heavy = 0;
      for (Vertex v = 0; v < g.num_vertices(); ++v) heavy += g.degree(v) >= d;
      EXPECT_LE(heavy * static_cast<std::size_t>(d), 2 * g.num_edges());
    }
  }
}

TEST(Square, Examples) {
  EXPECT_EQ(square(path_graph(3)), complete_graph(3));
  EXPECT_EQ(square(complete_graph(3)), complete_graph(3));
  const Graph p4 = square(path_graph(4));
  EXPECT_EQ(p4.num_edges(), 5u);
  EXPECT_TRUE(p4.adjacent(0, 2));
  EXPECT_TRUE(p4.adjacent(1, 3));
  EXPECT_FALSE(p4.adjacent(0, 3));
}

TEST(Square, MatchesDistanceOracleOnAllSmallGraphs) {
  for (Vertex n = 1; n <= 7; ++n) {
    const int pairs = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
      const Graph g = testing::graph_from_mask(n, mask);
      const Graph sq = square(g);
      const auto dist = all_pairs_distance(g);
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
          ASSERT_EQ(sq.adjacent(u, v), dist[u][v] <= 2) << "n=" << n << " mask=" << mask;
    }
  }
}

TEST(Square, MatchesDistanceOracleOnRandomGraphs) {
  Rng rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = random_gnp(40, 0.05 + 0.1 * uniform_unit(rng), rng());
    const Graph sq = square(g);
    const auto dist = all_pairs_distance(g);
    for (Vertex u = 0; u < 40; ++u)
      for (Vertex v = u + 1; v < 40; ++v) ASSERT_EQ(sq.adjacent(u, v), dist[u][v] <= 2);
  }
}

TEST(Bfs, Examples) {
  const auto t = bfs_tree(path_graph(3), 0);
  EXPECT_EQ(t.depth, (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(t.parent[0], 0);

  const auto c4 = bfs_tree(cycle_graph(4), 0);
  EXPECT_EQ(c4.depth, (std::vector<int>{0, 1, 2, 1}));
  EXPECT_EQ(c4.parent[2], 1);
  EXPECT_EQ(c4.root_path(2), (std::vector<Vertex>{0, 1, 2}));

  const Graph split = make_graph(4, {{0, 1}, {1, 2}});
  EXPECT_THROW(bfs_tree(split, 0), Disconnected);
}

TEST(Bfs, DepthsAreShortestDistances) {
  Rng rng(31);
  int checked = 0;
  while (checked < 200) {
    const Graph g = random_gnp(20, 0.15, rng());
    if (!is_connected(g)) continue;
    ++checked;
    const auto root = static_cast<Vertex>(uniform_below(rng, 20));
    const auto t = bfs_tree(g, root);
    const auto dist = all_pairs_distance(g);
    for (Vertex v = 0; v < 20; ++v) {
      EXPECT_EQ(t.depth[v], dist[root][v]);
      if (v != root) {
        EXPECT_EQ(t.depth[v], t.depth[t.parent[v]] + 1);
        EXPECT_TRUE(g.adjacent(v, t.parent[v]));
      }
    }
  }
}

TEST(Components, Examples) {
  const Graph g = make_graph(5, {{0, 1}, {1, 2}, {3, 4}});
  const auto parts = components(g);
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0], (std::vector<Vertex>{0, 1, 2}));
  EXPECT_EQ(parts[1], (std::vector<Vertex>{3, 4}));
}

TEST(InducedSubgraph, Examples) {
  const Vertex pair[] = {0, 1};
  const auto sub = induced_subgraph(complete_graph(3), pair);
  EXPECT_EQ(sub.graph, complete_graph(2));
  EXPECT_EQ(sub.to_parent, (std::vector<Vertex>{0, 1}));

  const auto empty = induced_subgraph(complete_graph(3), std::span<const Vertex>{});
  EXPECT_EQ(empty.graph.num_vertices(), 0);

  const Vertex ends[] = {3, 0};
  const auto path_ends = induced_subgraph(path_graph(4), ends);
  EXPECT_EQ(path_ends.graph.num_edges(), 0u);
  EXPECT_EQ(path_ends.to_parent, (std::vector<Vertex>{0, 3}));
}

}  // namespace
}  // namespace vrank
