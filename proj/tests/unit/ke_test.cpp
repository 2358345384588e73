#include "sdgraph/ke.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "sdgraph/configurations.hpp"
#include "sdgraph/enumeration.hpp"
#include "sdgraph/errors.hpp"
#include "sdgraph/fixtures.hpp"
#include "sdgraph/io.hpp"

namespace sdgraph {
namespace {

TEST(Independence, SmallFamilies) {
  EXPECT_EQ(independence_number(cycle_graph(5)), 2);
  EXPECT_EQ(independence_number(complete_graph(4)), 1);
  EXPECT_EQ(independence_number(Graph(6)), 6);
  EXPECT_EQ(independence_number(path_graph(7)), 4);
  EXPECT_THROW(independence_number(Graph(41)), CapacityError);
}

TEST(Independence, AgreesWithSubsetSearch) {
  ConnectedGraphCatalog catalog;
  for (const Graph& g : catalog.up_to(7)) {
    ASSERT_EQ(independence_number(g), oracle::independence_number(g));
  }
}

TEST(Independence, ReturnedSetIsIndependent) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = oracle::random_connected(rng, 12, 0.3);
    const VertexSet s = maximum_independent_set(g);
    for (VertexId v : s) EXPECT_FALSE(g.neighbors(v).intersects(s));
    EXPECT_EQ(s.size(), oracle::independence_number(g));
  }
}

TEST(KeDirect, Examples) {
  const KeVerdict c6 = is_ke_direct(cycle_graph(6));
  EXPECT_TRUE(c6.is_ke);
  EXPECT_EQ(c6.tau, c6.mu);
  const KeVerdict c5 = is_ke_direct(cycle_graph(5));
  EXPECT_FALSE(c5.is_ke);
  EXPECT_EQ(c5.alpha + c5.mu, 4);
  EXPECT_EQ(c5.tau, 3);
  EXPECT_FALSE(is_ke_direct(named_fixture("edmonds_fig1").graph).is_ke);
}

TEST(KeConfigurations, Examples) {
  EXPECT_TRUE(is_ke_sterboul(cycle_graph(4)).is_ke);
  const KeVerdict c5 = is_ke_sterboul(cycle_graph(5));
  EXPECT_FALSE(c5.is_ke);
  EXPECT_EQ(c5.matchings, 5);
  EXPECT_TRUE(c5.uniform());
  EXPECT_FALSE(is_ke_tposy(named_fixture("posy_fig5").graph).is_ke);
  EXPECT_TRUE(is_ke_tposy(path_graph(6)).is_ke);
  EXPECT_EQ(to_string(KeMethod::tposy), "tposy");
}

TEST(KeConfigurations, AgreeWithDirectOnSmallGraphs) {
  ConnectedGraphCatalog catalog;
  for (const Graph& g : catalog.up_to(6)) {
    const bool direct = is_ke_direct(g).is_ke;
    const KeVerdict s = is_ke_sterboul(g);
    const KeVerdict t = is_ke_tposy(g);
    ASSERT_EQ(s.is_ke, direct);
    ASSERT_EQ(t.is_ke, direct);
    ASSERT_TRUE(s.uniform());
    ASSERT_TRUE(t.uniform());
  }
}

TEST(KeConfigurations, MarkedVertexRulesOutKe) {
  ConnectedGraphCatalog catalog;
  for (const Graph& g : catalog.up_to(6)) {
    if (!mark_vertices(g).v_t.empty()) ASSERT_FALSE(is_ke_direct(g).is_ke);
  }
}

TEST(Hamiltonian, Examples) {
  EXPECT_TRUE(is_hamiltonian(cycle_graph(5)));
  EXPECT_FALSE(is_hamiltonian(path_graph(5)));
  EXPECT_TRUE(is_hamiltonian(complete_graph(4).without_edge(Edge(0, 1))));
  EXPECT_TRUE(is_hamiltonian(complete_graph(2)));
  EXPECT_FALSE(is_hamiltonian(Graph(1)));
  EXPECT_FALSE(is_hamiltonian(barbell_graph(3, 3, 1)));
  EXPECT_THROW(is_hamiltonian(Graph(13)), CapacityError);
}

TEST(Hamiltonian, CycleIsValidAndMatchesPermutationSearch) {
  ConnectedGraphCatalog catalog;
  for (const Graph& g : catalog.up_to(6)) {
    const auto cycle = hamiltonian_cycle(g);
    bool brute = false;
    if (g.order() >= 3) {
      std::vector<VertexId> perm(g.order());
      std::iota(perm.begin(), perm.end(), 0);
      do {
        brute = is_simple_cycle(g, perm);
      } while (!brute && std::next_permutation(perm.begin() + 1, perm.end()));
    } else {
      brute = g.order() == 2;
    }
    ASSERT_EQ(cycle.has_value(), brute) << to_graph6(g);
    if (cycle && g.order() >= 3) {
      ASSERT_TRUE(is_simple_cycle(g, *cycle));
      ASSERT_EQ(static_cast<int>(cycle->size()), g.order());
    }
  }
}

}  // namespace
}  // namespace sdgraph
