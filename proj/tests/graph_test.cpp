#include <gtest/gtest.h>

#include <random>

#include "boxcube/graph.hpp"
#include "support/brute.hpp"

namespace boxcube {
namespace {

using testing::all_graphs;
using testing::graph_from_mask;

TEST(GraphTest, StarFive) {
  const Graph g = star(5);
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {0, 4}}));
  EXPECT_EQ(g.edge_count(), 4u);
}

TEST(GraphTest, DegenerateStars) {
  EXPECT_EQ(star(1).vertex_count(), 1);
  EXPECT_EQ(star(1).edge_count(), 0u);
  EXPECT_EQ(star(2).edges(), (std::vector<Edge>{{0, 1}}));
  EXPECT_THROW(star(0), std::invalid_argument);
}

TEST(GraphTest, Families) {
  EXPECT_EQ(complete(4).edge_count(), 6u);
  EXPECT_EQ(path(3).edges(), (std::vector<Edge>{{0, 1}, {1, 2}}));
  EXPECT_EQ(cycle(4).edges(), (std::vector<Edge>{{0, 1}, {0, 3}, {1, 2}, {2, 3}}));
  EXPECT_THROW(cycle(2), std::invalid_argument);
  EXPECT_EQ(complete(0).vertex_count(), 0);
  EXPECT_EQ(path(0).edge_count(), 0u);
}

TEST(GraphTest, MembershipIsSymmetric) {
  Graph g(70);
  g.add_edge(3, 67);
  EXPECT_TRUE(g.has_edge(3, 67));
  EXPECT_TRUE(g.has_edge(67, 3));
  EXPECT_FALSE(g.has_edge(3, 3));
  g.add_edge(67, 3);
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_THROW(g.add_edge(5, 5), std::invalid_argument);
  EXPECT_THROW(g.add_edge(0, 70), std::invalid_argument);
}

TEST(GraphTest, EdgeIntersectionIdentityAndIdempotence) {
  for (std::uint64_t m = 0; m < 64; ++m) {
    const Graph g = graph_from_mask(4, m);
    EXPECT_EQ(edge_intersection({g, g}), g);
    EXPECT_EQ(edge_intersection({g, complete(4)}), g);
  }
}

TEST(GraphTest, EdgeIntersectionAlgebra) {
  const auto graphs = all_graphs(4);
  std::mt19937 rng(11);
  std::uniform_int_distribution<std::size_t> pick(0, graphs.size() - 1);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph& a = graphs[pick(rng)];
    const Graph& b = graphs[pick(rng)];
    const Graph& c = graphs[pick(rng)];
    EXPECT_EQ(edge_intersection({a, b}), edge_intersection({b, a}));
    EXPECT_EQ(edge_intersection({edge_intersection({a, b}), c}), edge_intersection({a, edge_intersection({b, c})}));
    const Graph ab = edge_intersection({a, b});
    for (int u = 0; u < 4; ++u)
      for (int v = 0; v < 4; ++v) EXPECT_EQ(ab.has_edge(u, v), a.has_edge(u, v) && b.has_edge(u, v));
  }
}

TEST(GraphTest, EdgeIntersectionErrors) {
  EXPECT_THROW(edge_intersection({}), std::invalid_argument);
  EXPECT_THROW(edge_intersection({path(3), path(4)}), std::invalid_argument);
}

TEST(GraphTest, AddIsolatedKeepsEdges) {
  const Graph g = add_isolated(path(3), 1);
  EXPECT_EQ(g.vertex_count(), 4);
  EXPECT_EQ(g.edges(), path(3).edges());
  EXPECT_EQ(restrict_to_prefix(g, 3), path(3));
  EXPECT_EQ(g.degree(3), 0);
}

TEST(GraphTest, IsComplete) {
  EXPECT_TRUE(is_complete(complete(3)));
  EXPECT_TRUE(is_complete(Graph(1)));
  EXPECT_TRUE(is_complete(Graph(0)));
  EXPECT_FALSE(is_complete(path(3)));
}

TEST(GraphTest, Diameter) {
  const auto d = diameter(path(4));
  EXPECT_EQ(d.max_diameter, 3);
  EXPECT_TRUE(d.connected);

  Graph two(5);  // P_3 on {0,1,2} plus edge {3,4}
  two.add_edge(0, 1);
  two.add_edge(1, 2);
  two.add_edge(3, 4);
  const auto e = diameter(two);
  EXPECT_FALSE(e.connected);
  EXPECT_EQ(e.max_diameter, 2);
  EXPECT_EQ(e.component_diameters, (std::vector<int>{2, 1}));

  EXPECT_EQ(diameter(cycle(6)).max_diameter, 3);
  EXPECT_EQ(diameter(complete(5)).max_diameter, 1);
  EXPECT_EQ(diameter(Graph(1)).max_diameter, 0);
}

TEST(GraphTest, EdgeDiff) {
  const auto d = edge_diff(cycle(4), path(4));
  EXPECT_EQ(d.missing, (std::vector<Edge>{{0, 3}}));
  EXPECT_TRUE(d.extra.empty());
  EXPECT_TRUE(edge_diff(path(4), path(4)).empty());
}

TEST(GraphTest, CompleteMultipartite) {
  const Graph k22 = complete_multipartite({2, 2});
  EXPECT_EQ(k22.edge_count(), 4u);
  EXPECT_FALSE(k22.has_edge(0, 1));
  EXPECT_FALSE(k22.has_edge(2, 3));
}

}  // namespace
}  // namespace boxcube
