#include <gtest/gtest.h>

#include "ecpoly/error.hpp"
#include "ecpoly/graph.hpp"
#include "test_support.hpp"

namespace ecpoly {
namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::BadParameters;
}

TEST(Graph, NormalisesEdgeOrder) {
  const Graph g = build_graph(4, {{3, 2}, {1, 0}, {2, 0}});
  ASSERT_EQ(g.size(), 3u);
  EXPECT_EQ(g.edge(0), (Edge{0, 1}));
  EXPECT_EQ(g.edge(1), (Edge{0, 2}));
  EXPECT_EQ(g.edge(2), (Edge{2, 3}));
  EXPECT_EQ(g.degree(0), 2u);
  EXPECT_EQ(g.degree(1), 1u);
  EXPECT_TRUE(g.adjacent(3, 2));
  EXPECT_FALSE(g.adjacent(1, 3));
  EXPECT_EQ(g.find_edge(2, 0), 1u);
  EXPECT_EQ(g.find_edge(1, 3), g.size());
}

TEST(Graph, RejectsBadInput) {
  EXPECT_EQ(kind_of([] { build_graph(3, {{1, 1}}); }), ErrorKind::LoopEdge);
  EXPECT_EQ(kind_of([] { build_graph(3, {{0, 1}, {1, 0}}); }), ErrorKind::DuplicateEdge);
  EXPECT_EQ(kind_of([] { build_graph(3, {{0, 3}}); }), ErrorKind::VertexOutOfRange);
  EXPECT_EQ(kind_of([] { build_graph(63, {}); }), ErrorKind::UnsupportedSize);
  EXPECT_EQ(kind_of([] { delete_edge(build_graph(2, {{0, 1}}), 1); }), ErrorKind::EdgeOutOfRange);
}

TEST(Graph, Connectivity) {
  EXPECT_TRUE(is_connected(Graph{}));
  EXPECT_TRUE(is_connected(build_graph(1, {})));
  EXPECT_FALSE(is_connected(build_graph(2, {})));
  EXPECT_TRUE(is_connected(build_graph(3, {{0, 1}, {1, 2}})));
  EXPECT_FALSE(is_connected(build_graph(4, {{0, 1}, {2, 3}})));
  EXPECT_TRUE(build_graph(3, {{0, 1}}).has_isolated_vertex());
}

TEST(Graph, DeleteVertexShiftsLabels) {
  const Graph g = build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  const Graph h = delete_vertex(g, 1);
  EXPECT_EQ(h, build_graph(3, {{1, 2}, {0, 2}}));
  const Graph k = delete_edge(g, g.find_edge(2, 3));
  EXPECT_EQ(k, build_graph(4, {{0, 1}, {1, 2}, {0, 3}}));
}

TEST(Graph, RelabelPreservesDegreeSequence) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = testing::random_connected_graph(9, 14, rng);
    const auto perm = testing::random_permutation(9, rng);
    const Graph h = relabel(g, perm);
    ASSERT_EQ(h.size(), g.size());
    for (Vertex v = 0; v < 9; ++v) EXPECT_EQ(h.degree(perm[v]), g.degree(v));
    for (const Edge& e : g.edges()) EXPECT_TRUE(h.adjacent(perm[e.u], perm[e.v]));
  }
}

TEST(EdgeSubset, Operations) {
  const Graph g = build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  EdgeSubset s = EdgeSubset::of(g, {0, 2});
  EXPECT_EQ(s.count(), 2u);
  EXPECT_TRUE(s.contains(2));
  s.insert(1);
  s.erase(0);
  EXPECT_EQ(s, EdgeSubset::from_mask(g, 0b0110));
  EXPECT_EQ(EdgeSubset::all(g).count(), 4u);
}

TEST(EdgeSubset, CoveredAndConnected) {
  const Graph c4 = build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  EXPECT_TRUE(covered_and_connected(c4, EdgeSubset::all(c4)));
  EXPECT_TRUE(covered_and_connected(c4, EdgeSubset::from_mask(c4, 0b0111)));
  // perfect matching covers but is disconnected
  EXPECT_FALSE(covered_and_connected(c4, EdgeSubset::of(c4, {c4.find_edge(0, 1), c4.find_edge(2, 3)})));
  EXPECT_FALSE(covered_and_connected(c4, EdgeSubset(c4)));
  EXPECT_TRUE(covered_and_connected(Graph{}, EdgeSubset(Graph{})));
}

}  // namespace
}  // namespace ecpoly
