#include <gtest/gtest.h>

#include <sstream>

#include "coct/error.hpp"
#include "coct/graph.hpp"

using namespace coct;

namespace {

LabeledGraph make(int n, std::vector<Edge> edges) { return LabeledGraph(std::vector<int>(n, 1), std::move(edges)); }

LabeledGraph cycle(int n) {
  std::vector<Edge> edges;
  for (int v = 1; v <= n; ++v) edges.push_back({v, v % n + 1});
  return make(n, edges);
}

}  // namespace

TEST(Graph, NormalizesEdges) {
  LabeledGraph g({1, 2, 1}, {{2, 1}, {1, 2}, {3, 2}});
  ASSERT_EQ(g.num_edges(), 2u);
  EXPECT_EQ(g.edges()[0], (Edge{1, 2}));
  EXPECT_EQ(g.edges()[1], (Edge{2, 3}));
  EXPECT_TRUE(g.has_edge(3, 2));
  EXPECT_FALSE(g.has_edge(1, 3));
  EXPECT_EQ(g.max_label(), 2);
}

TEST(Graph, RejectsLoopsAndBadIds) {
  EXPECT_THROW(make(2, {{1, 1}}), InputError);
  EXPECT_THROW(make(2, {{1, 3}}), InputError);
}

TEST(Graph, Connectivity) {
  auto tri = make(3, {{1, 2}, {2, 3}, {1, 3}});
  EXPECT_TRUE(is_connected(tri, VertexSet(3, {1, 2, 3})));
  auto path = make(3, {{1, 2}, {2, 3}});
  EXPECT_FALSE(is_connected(path, VertexSet(3, {1, 3})));
  EXPECT_TRUE(is_connected(path, VertexSet(3)));
}

TEST(Graph, TwoColoring) {
  auto c5 = cycle(5);
  EXPECT_FALSE(two_coloring(c5, VertexSet(5)).has_value());
  auto w = two_coloring(c5, VertexSet(5, {3}));
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ((*w)[3], Side::removed);
  for (const auto& e : c5.edges()) {
    if (e.u == 3 || e.v == 3) continue;
    EXPECT_NE((*w)[e.u], (*w)[e.v]);
  }
  auto k2 = make(2, {{1, 2}});
  auto w2 = two_coloring(k2, VertexSet(2));
  ASSERT_TRUE(w2.has_value());
  EXPECT_NE((*w2)[1], (*w2)[2]);
}

TEST(Graph, VerifyCoct) {
  EXPECT_TRUE(verify_coct(cycle(5), VertexSet(5, {1})));
  auto two_triangles = make(6, {{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}});
  EXPECT_FALSE(verify_coct(two_triangles, VertexSet(6, {1, 4})));
  EXPECT_TRUE(verify_coct(cycle(4), VertexSet(4)));
  EXPECT_TRUE(is_bipartite(cycle(6)));
  EXPECT_FALSE(is_bipartite(cycle(7)));
}

TEST(Graph, TextRoundTrip) {
  LabeledGraph g({1, 3, 2, 1}, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
  std::stringstream buf;
  write_graph(buf, g);
  auto h = read_graph(buf);
  EXPECT_EQ(h.edges(), g.edges());
  EXPECT_EQ(h.labels(), g.labels());
}

TEST(Graph, ReadRejectsGarbage) {
  std::stringstream bad("p graph 2 1\ne 1 5\n");
  EXPECT_THROW(read_graph(bad), InputError);
  std::stringstream missing("e 1 2\n");
  EXPECT_THROW(read_graph(missing), InputError);
}

TEST(VertexSet, Basics) {
  VertexSet s(70);
  s.insert(1);
  s.insert(70);
  EXPECT_EQ(s.size(), 2);
  EXPECT_TRUE(s.contains(70));
  s.erase(70);
  EXPECT_EQ(s.members(), std::vector<Vertex>{1});
  EXPECT_THROW(s.insert(71), InputError);
}
