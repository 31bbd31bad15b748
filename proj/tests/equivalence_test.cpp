#include <gtest/gtest.h>

#include <algorithm>

#include "ecpoly/canonical.hpp"
#include "ecpoly/equivalence.hpp"
#include "ecpoly/families.hpp"
#include "ecpoly/oracle.hpp"

namespace ecpoly {
namespace {

TEST(Equivalence, TreesCollide) {
  const std::vector<Graph> graphs = {path_graph(4), complete_bipartite_graph(1, 3), cycle_graph(4),
                                     relabel(path_graph(4), std::vector<Vertex>{2, 0, 3, 1})};
  const EquivalenceScan scan = equivalence_classes(graphs);
  ASSERT_EQ(scan.classes.size(), 2u);
  const auto tree_class = std::find_if(scan.classes.begin(), scan.classes.end(),
                                       [](const auto& c) { return c.polynomial == IntPolynomial({0, 0, 0, 1}); });
  ASSERT_NE(tree_class, scan.classes.end());
  EXPECT_EQ(tree_class->members.size(), 2u);
  EXPECT_TRUE(tree_class->has_non_isomorphic_members());
  ASSERT_EQ(scan.equivalent_pairs.size(), 1u);
  EXPECT_LT(scan.equivalent_pairs[0].first, scan.equivalent_pairs[0].second);
}

TEST(Equivalence, CompleteGraphsAreAlone) {
  std::vector<Graph> graphs;
  for (std::size_t n = 1; n <= 6; ++n) {
    for (auto& g : enumerate_connected_graphs(n)) graphs.push_back(std::move(g));
  }
  const EquivalenceScan scan = equivalence_classes(graphs);
  EXPECT_TRUE(scan.skipped.empty());
  for (std::size_t n = 3; n <= 6; ++n) {
    const IntPolynomial target = connected_edge_cover_polynomial(complete_graph(n));
    const auto it = std::find_if(scan.classes.begin(), scan.classes.end(),
                                 [&](const auto& c) { return c.polynomial == target; });
    ASSERT_NE(it, scan.classes.end());
    EXPECT_EQ(it->members, std::vector<std::string>{canonicalize(complete_graph(n))});
  }
  std::size_t members = 0;
  for (const auto& c : scan.classes) members += c.members.size();
  EXPECT_EQ(members, 1u + 1 + 2 + 6 + 21 + 112);
}

TEST(Equivalence, SkipsOversizedGraphs) {
  const std::vector<Graph> graphs = {complete_graph(6), cycle_graph(5)};
  const EquivalenceScan scan = equivalence_classes(graphs, OracleConfig{10, 1});
  ASSERT_EQ(scan.skipped.size(), 1u);
  EXPECT_EQ(scan.skipped[0], canonicalize(complete_graph(6)));
  EXPECT_EQ(scan.classes.size(), 1u);
}

}  // namespace
}  // namespace ecpoly
