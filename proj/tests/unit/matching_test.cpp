#include "sdgraph/matching.hpp"

#include <random>
#include <set>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "sdgraph/enumeration.hpp"
#include "sdgraph/errors.hpp"
#include "sdgraph/fixtures.hpp"

namespace sdgraph {
namespace {

TEST(Matching, ConstructionAndInvolution) {
  const Graph c4 = cycle_graph(4);
  const Matching m = Matching::from_edges(c4, std::vector<Edge>{{0, 1}, {2, 3}});
  EXPECT_EQ(m.size(), 2);
  EXPECT_TRUE(m.is_perfect());
  for (VertexId v = 0; v < 4; ++v) EXPECT_EQ(m(m(v)), v);
  EXPECT_TRUE(m.contains(1, 0));
  EXPECT_FALSE(m.contains(1, 2));
  EXPECT_THROW(Matching::from_edges(c4, std::vector<Edge>{{0, 1}, {1, 2}}),
               ValidationError);
  EXPECT_THROW(Matching::from_edges(c4, std::vector<Edge>{{0, 2}}),
               ValidationError);
  EXPECT_THROW(Matching::from_mates({1, 2, 0}), ValidationError);
  EXPECT_EQ(Matching::from_mates({1, 0, 2}).exposed(), VertexSet::single(2));
}

TEST(Matching, EdgesWithin) {
  const Graph c6 = cycle_graph(6);
  const Matching m =
      Matching::from_edges(c6, std::vector<Edge>{{0, 1}, {2, 3}, {4, 5}});
  const std::vector<Edge> sub{{0, 1}, {1, 2}, {2, 3}};
  EXPECT_EQ(m.edges_within(sub), (std::vector<Edge>{{0, 1}, {2, 3}}));
}

TEST(MaximumMatching, SmallFamilies) {
  EXPECT_EQ(matching_number(cycle_graph(5)), 2);
  EXPECT_EQ(matching_number(complete_graph(7)), 3);
  EXPECT_EQ(matching_number(Graph(3)), 0);
  EXPECT_EQ(matching_number(barbell_graph(3, 3, 1)), 3);
}

TEST(MaximumMatching, FixtureMatchingsAreMaximum) {
  for (const std::string& name : fixture_names()) {
    const Fixture f = named_fixture(name);
    const Matching m = Matching::from_edges(f.graph, f.matching);
    EXPECT_TRUE(is_maximum(f.graph, m)) << name;
    EXPECT_EQ(m.size(), matching_number(f.graph)) << name;
  }
}

TEST(MaximumMatching, AgreesWithExhaustiveSearchOnAllSmallGraphs) {
  ConnectedGraphCatalog catalog;
  for (const Graph& g : catalog.up_to(7)) {
    const Matching m = maximum_matching(g);
    ASSERT_TRUE(is_matching_of(g, m));
    ASSERT_EQ(m.size(), oracle::matching_number(g)) << g.order();
    ASSERT_TRUE(is_maximum(g, m));
  }
}

TEST(MaximumMatching, RandomGraphsUpToTwelve) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 11;
    std::vector<Edge> edges;
    std::bernoulli_distribution coin(0.3);
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        if (coin(rng)) edges.emplace_back(a, b);
      }
    }
    const Graph g = Graph::from_edges(n, edges);
    ASSERT_EQ(matching_number(g), oracle::matching_number(g));
  }
}

TEST(IsMaximum, DetectsAugmentingPaths) {
  const Graph p4 = path_graph(4);
  EXPECT_FALSE(is_maximum(p4, Matching::from_edges(p4, std::vector<Edge>{{1, 2}})));
  EXPECT_TRUE(is_maximum(p4, Matching::from_edges(
                                 p4, std::vector<Edge>{{0, 1}, {2, 3}})));
  EXPECT_THROW(is_maximum(p4, Matching(3)), DomainError);
}

TEST(EnumerateMaximumMatchings, MatchesBruteForce) {
  ConnectedGraphCatalog catalog;
  for (const Graph& g : catalog.up_to(6)) {
    std::set<std::vector<Edge>> expected;
    for (const Matching& m : oracle::maximum_matchings(g)) {
      expected.insert(m.edges());
    }
    std::set<std::vector<Edge>> got;
    for (const Matching& m : enumerate_maximum_matchings(g)) {
      ASSERT_TRUE(got.insert(m.edges()).second) << "duplicate";
    }
    ASSERT_EQ(got, expected);
  }
}

TEST(EnumerateMaximumMatchings, KnownCounts) {
  EXPECT_EQ(enumerate_maximum_matchings(complete_graph(6)).size(), 15U);
  EXPECT_EQ(enumerate_maximum_matchings(complete_graph(5)).size(), 15U);
  EXPECT_EQ(enumerate_maximum_matchings(cycle_graph(8)).size(), 2U);
  EXPECT_EQ(enumerate_maximum_matchings(cycle_graph(7)).size(), 7U);
  EXPECT_EQ(enumerate_maximum_matchings(Graph(3)).size(), 1U);
  EXPECT_THROW(enumerate_maximum_matchings(Graph(17)), CapacityError);
}

TEST(EnumerateMaximumMatchings, VisitorCanStop) {
  int seen = 0;
  const bool finished = for_each_maximum_matching(
      complete_graph(6), [&](const Matching&) { return ++seen < 3; });
  EXPECT_FALSE(finished);
  EXPECT_EQ(seen, 3);
}

TEST(Rotate, EvenAlternatingCycle) {
  const Graph c6 = cycle_graph(6);
  const Matching m =
      Matching::from_edges(c6, std::vector<Edge>{{0, 1}, {2, 3}, {4, 5}});
  const VertexSequence cyc{0, 1, 2, 3, 4, 5};
  const Matching r = rotate(c6, m, cyc);
  EXPECT_EQ(r.edges(), (std::vector<Edge>{{0, 5}, {1, 2}, {3, 4}}));
  EXPECT_EQ(rotate(c6, r, cyc), m);
  const VertexSequence closed{0, 1, 2, 3, 4, 5, 0};
  EXPECT_EQ(rotate(c6, m, closed), r);
  const Graph c5 = cycle_graph(5);
  const Matching m5 = Matching::from_edges(c5, std::vector<Edge>{{0, 1}, {2, 3}});
  EXPECT_THROW(rotate(c5, m5, VertexSequence{0, 1, 2, 3, 4}), DomainError);
}

TEST(Rotate, AlternatingCyclesKeepMatchingsMaximum) {
  ConnectedGraphCatalog catalog;
  int rotations = 0;
  for (const Graph& g : catalog.of_order(6)) {
    const std::vector<Matching> all = enumerate_maximum_matchings(g);
    const std::set<std::vector<Edge>> known = [&] {
      std::set<std::vector<Edge>> s;
      for (const Matching& m : all) s.insert(m.edges());
      return s;
    }();
    for (const Matching& m : all) {
      for (VertexId s = 0; s < g.order(); ++s) {
        for (const VertexSequence& p : oracle::simple_paths_from(g, s)) {
          if (p.size() < 4 || p.size() % 2 != 0 || !g.adjacent(p.back(), s)) {
            continue;
          }
          VertexSequence closed = p;
          closed.push_back(s);
          if (!oracle::alternates(m, closed) ||
              m.contains(p[0], p[1]) == m.contains(p.back(), s)) {
            continue;
          }
          const Matching r = rotate(g, m, p);
          ASSERT_TRUE(is_maximum(g, r));
          ASSERT_TRUE(known.contains(r.edges()));
          ASSERT_NE(r, m);
          ++rotations;
        }
      }
    }
  }
  EXPECT_GT(rotations, 0);
}

}  // namespace
}  // namespace sdgraph
