#include "sdgraph/enumeration.hpp"

#include <fstream>
#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "sdgraph/errors.hpp"
#include "sdgraph/io.hpp"

namespace sdgraph {
namespace {

TEST(Isomorphism, RelabelledCopiesAreIsomorphic) {
  std::mt19937_64 rng(7);
  const Graph g = barbell_graph(3, 5, 2);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<VertexId> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const Graph h = g.relabeled(perm);
    EXPECT_EQ(invariant_hash(g), invariant_hash(h));
    EXPECT_TRUE(are_isomorphic(g, h));
  }
}

TEST(Isomorphism, DistinguishesCospectralLikePairs) {
  // C6 and two disjoint triangles: same degree sequence.
  const Graph c6 = cycle_graph(6);
  const Graph two_triangles = Graph::from_edges(
      6, std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  EXPECT_FALSE(are_isomorphic(c6, two_triangles));
  // Regular graphs that colour refinement alone cannot split: the 3-prism
  // and K_{3,3}.
  const Graph prism = Graph::from_edges(
      6, std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5},
                           {0, 3}, {1, 4}, {2, 5}});
  std::vector<Edge> k33;
  for (int a = 0; a < 3; ++a) {
    for (int b = 3; b < 6; ++b) k33.emplace_back(a, b);
  }
  EXPECT_FALSE(are_isomorphic(prism, Graph::from_edges(6, k33)));
}

TEST(IsomorphismClasses, InsertFind) {
  IsomorphismClasses classes;
  EXPECT_TRUE(classes.insert(path_graph(3)).added);
  const auto again = classes.insert(parse_graph6("BW"));
  EXPECT_FALSE(again.added);
  EXPECT_EQ(again.index, 0);
  EXPECT_EQ(classes.find(cycle_graph(3)), -1);
}

TEST(ConnectedGraphCatalog, CountsMatchKnownSequence) {
  // Connected unlabelled graphs on n vertices, n = 1..8.
  const std::vector<std::size_t> expected{1, 1, 2, 6, 21, 112, 853, 11117};
  ConnectedGraphCatalog catalog;
  for (int n = 1; n <= 8; ++n) {
    EXPECT_EQ(catalog.of_order(n).size(), expected[n - 1]) << "n=" << n;
  }
  EXPECT_EQ(catalog.up_to(7).size(), 996U);
  EXPECT_THROW(catalog.of_order(11), CapacityError);
}

TEST(ConnectedGraphCatalog, AgreesWithAtlasExport) {
  std::ifstream in(SDGRAPH_TEST_DATA_DIR "/connected_upto7.g6");
  ASSERT_TRUE(in);
  const std::vector<Graph> atlas = read_graph6_stream(in);
  IsomorphismClasses classes;
  for (const Graph& g : atlas) ASSERT_TRUE(classes.insert(g).added);
  ConnectedGraphCatalog catalog;
  std::map<int, int> per_order;
  for (const Graph& g : catalog.up_to(7)) {
    EXPECT_GE(classes.find(g), 0) << to_graph6(g);
    EXPECT_TRUE(g.is_connected());
    ++per_order[g.order()];
  }
  EXPECT_EQ(per_order[7], 853);
}

}  // namespace
}  // namespace sdgraph
