#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "linkpred/indices.hpp"
#include "test_support.hpp"

namespace linkpred {
namespace {

using testing::adjacency_matrix;
using testing::close_rel;
using testing::random_edge_list;

Graph triangle() {
  const std::vector<NodePair> edges = {{0, 1}, {1, 2}, {2, 0}};
  return build_graph(edges, 3);
}

TEST(Jaccard, Triangle) { EXPECT_DOUBLE_EQ(jaccard(triangle(), 0, 1), 1.0 / 3.0); }

TEST(Jaccard, IsolatedPairIsZero) {
  const std::vector<NodePair> edges = {{0, 1}};
  EXPECT_EQ(jaccard(build_graph(edges, 4), 2, 3), 0.0);
}

TEST(Jaccard, StarLeavesShareEverything) {
  const std::vector<NodePair> star = {{0, 1}, {0, 2}, {0, 3}};
  EXPECT_EQ(jaccard(build_graph(star, 4), 1, 2), 1.0);
}

TEST(Indices, SamePairIsInvalid) {
  const Graph g = triangle();
  for (auto call : {+[](const Graph& h) { return jaccard(h, 1, 1); },
                    +[](const Graph& h) { return adamic_adar(h, 1, 1); },
                    +[](const Graph& h) { return common_neighbor_count(h, 1, 1); },
                    +[](const Graph& h) { return common_neighbor_centrality(h, 1, 1, CncParams(0.5)); }}) {
    try {
      call(g);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::kInvalidPair);
    }
  }
}

TEST(AdamicAdar, NoCommonNeighborsIsZero) {
  const std::vector<NodePair> edges = {{0, 1}, {2, 3}};
  EXPECT_EQ(adamic_adar(build_graph(edges, 4), 0, 2), 0.0);
}

TEST(AdamicAdar, SingleMiddleNode) {
  const std::vector<NodePair> path = {{0, 1}, {1, 2}};
  EXPECT_NEAR(adamic_adar(build_graph(path, 3), 0, 2), 1.442695040888963, 1e-12);
}

TEST(AdamicAdar, AddingCommonNeighborNeverDecreases) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto edges = random_edge_list(15, 30, seed);
    const Graph before = build_graph(edges, 16);
    // Node 15 is fresh; wiring it to 0 and 1 adds one common neighbor and
    // leaves every other common neighbor's degree untouched.
    edges.push_back({15, 0});
    edges.push_back({15, 1});
    const Graph after = build_graph(edges, 16);
    EXPECT_GT(adamic_adar(after, 0, 1), adamic_adar(before, 0, 1));
  }
}

TEST(AdamicAdar, LowerDegreeNeighborWeighsMore) {
  // Node 2 is the only common neighbor of 0 and 1; the second graph gives
  // it two extra leaves.
  const std::vector<NodePair> small = {{0, 2}, {1, 2}};
  const std::vector<NodePair> large = {{0, 2}, {1, 2}, {2, 3}, {2, 4}};
  EXPECT_GT(adamic_adar(build_graph(small, 5), 0, 1), adamic_adar(build_graph(large, 5), 0, 1));
}

TEST(Cnc, AlphaOneIsCommonNeighborCount) {
  const auto edges = random_edge_list(25, 60, 4);
  const Graph g = build_graph(edges, 25);
  for (NodeId u = 0; u < 25; ++u) {
    for (NodeId v = u + 1; v < 25; ++v) {
      EXPECT_EQ(common_neighbor_centrality(g, u, v, CncParams(1.0)), common_neighbor_count(g, u, v));
    }
  }
}

TEST(Cnc, AlphaZeroAdjacentIsNodeCount) {
  EXPECT_EQ(common_neighbor_centrality(triangle(), 0, 1, CncParams(0.0)), 3.0);
}

TEST(Cnc, TriangleHandValue) {
  EXPECT_NEAR(common_neighbor_centrality(triangle(), 0, 1, CncParams(0.8)), 1.4, 1e-15);
}

TEST(Cnc, UnreachableDistanceTermIsZero) {
  const std::vector<NodePair> edges = {{0, 1}, {2, 3}};
  EXPECT_EQ(common_neighbor_centrality(build_graph(edges, 4), 0, 3, CncParams(0.0)), 0.0);
}

TEST(Cnc, RejectsAlphaOutsideUnitInterval) {
  for (double bad : {-0.1, 1.5, std::numeric_limits<double>::quiet_NaN()}) {
    try {
      CncParams p(bad);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::kInvalidParameter);
    }
  }
}

TEST(Cnc, AffineInAlpha) {
  const auto edges = random_edge_list(30, 50, 8);
  const Graph g = build_graph(edges, 30);
  for (NodeId u = 0; u < 30; ++u) {
    for (NodeId v = u + 1; v < 30; ++v) {
      const double s0 = common_neighbor_centrality(g, u, v, CncParams(0.0));
      const double s1 = common_neighbor_centrality(g, u, v, CncParams(1.0));
      const double half = common_neighbor_centrality(g, u, v, CncParams(0.5));
      EXPECT_TRUE(close_rel(half, (s0 + s1) / 2.0, 1e-12));
    }
  }
}

TEST(Indices, SymmetricAndBounded) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto edges = random_edge_list(30, 70, 50 + seed);
    const Graph g = build_graph(edges, 30);
    for (NodeId u = 0; u < 30; ++u) {
      for (NodeId v = 0; v < 30; ++v) {
        if (u == v) continue;
        const double jc = jaccard(g, u, v);
        EXPECT_EQ(jc, jaccard(g, v, u));
        EXPECT_EQ(adamic_adar(g, u, v), adamic_adar(g, v, u));
        EXPECT_EQ(common_neighbor_count(g, u, v), common_neighbor_count(g, v, u));
        EXPECT_EQ(common_neighbor_centrality(g, u, v, CncParams()), common_neighbor_centrality(g, v, u, CncParams()));
        EXPECT_GE(jc, 0.0);
        EXPECT_LE(jc, 1.0);
        const auto a = g.neighbors(u);
        const auto b = g.neighbors(v);
        const bool same = !a.empty() && std::equal(a.begin(), a.end(), b.begin(), b.end());
        EXPECT_EQ(jc == 1.0, same);
        EXPECT_GE(adamic_adar(g, u, v), 0.0);
      }
    }
  }
}

TEST(Indices, MatchNaiveOracle) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const std::size_t n = 50;
    const auto edges = random_edge_list(n, 150, 900 + seed);
    const Graph g = build_graph(edges, n);
    const auto adj = adjacency_matrix(n, edges);
    const auto hops = testing::all_pairs_hops(adj);
    for (NodeId u = 0; u < n; ++u) {
      for (NodeId v = 0; v < n; ++v) {
        if (u == v) continue;
        double cn = 0;
        double uni = 0;
        double aa = 0;
        for (NodeId w = 0; w < n; ++w) {
          if (adj[u][w] && adj[v][w]) {
            cn += 1;
            aa += 1.0 / std::log(static_cast<double>(testing::matrix_degree(adj, w)));
          }
          if (adj[u][w] || adj[v][w]) uni += 1;
        }
        const double jc = uni == 0 ? 0.0 : cn / uni;
        const double dist_term =
            hops[u][v] == std::numeric_limits<std::uint32_t>::max() ? 0.0 : static_cast<double>(n) / hops[u][v];
        const double cnc = 0.8 * cn + 0.2 * dist_term;
        EXPECT_TRUE(close_rel(jaccard(g, u, v), jc, 1e-12));
        EXPECT_TRUE(close_rel(adamic_adar(g, u, v), aa, 1e-12));
        EXPECT_TRUE(close_rel(common_neighbor_count(g, u, v), cn, 1e-12));
        EXPECT_TRUE(close_rel(common_neighbor_centrality(g, u, v, CncParams(0.8)), cnc, 1e-12));
      }
    }
  }
}

TEST(Indices, HiddenEdgeEqualsScoringOnGraphWithoutIt) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto edges = random_edge_list(20, 45, 70 + seed);
    const Graph g = build_graph(edges, 20);
    for (const NodePair& e : g.edges()) {
      std::vector<NodePair> rest;
      for (const NodePair& f : g.edges()) {
        if (f != e) rest.push_back(f);
      }
      const Graph without = build_graph(rest, 20);
      constexpr auto kHide = EdgeVisibility::kHideDirectEdge;
      EXPECT_EQ(jaccard(g, e.u, e.v, kHide), jaccard(without, e.u, e.v));
      EXPECT_EQ(adamic_adar(g, e.u, e.v, kHide), adamic_adar(without, e.u, e.v));
      EXPECT_EQ(common_neighbor_count(g, e.u, e.v, kHide), common_neighbor_count(without, e.u, e.v));
      EXPECT_EQ(common_neighbor_centrality(g, e.u, e.v, CncParams(0.3), kHide),
                common_neighbor_centrality(without, e.u, e.v, CncParams(0.3)));
    }
  }
}

}  // namespace
}  // namespace linkpred
