#include "sdgraph/fixtures.hpp"

#include <array>
#include <utility>

#include "sdgraph/errors.hpp"

namespace sdgraph {
namespace {

using Pairs = std::vector<std::pair<int, int>>;

std::vector<Edge> to_edges(const Pairs& pairs) {
  std::vector<Edge> out;
  out.reserve(pairs.size());
  for (auto [a, b] : pairs) out.emplace_back(a, b);
  return out;
}

// Plain edges and matched edges are listed separately, as drawn; the graph
// is their union.
Fixture make(std::string name, std::string description, int order,
             const Pairs& plain, const Pairs& matched) {
  std::vector<Edge> all = to_edges(plain);
  std::vector<Edge> m = to_edges(matched);
  all.insert(all.end(), m.begin(), m.end());
  return {std::move(name), std::move(description),
          Graph::from_edges(order, all), std::move(m)};
}

Fixture edmonds_fig1() {
  // A loop 0/0 in the source listing is dropped; graphs are simple.
  return make("edmonds_fig1",
              "Edmonds configurations: blossoms 0,1,2 and 2,3,4 with bases 0 "
              "and 2; flower with stem 0,1,2",
              5, {{3, 2}, {4, 2}, {4, 0}, {1, 0}, {0, 2}}, {{1, 2}, {4, 3}});
}

Fixture jflower_fig4() {
  return make(
      "jflower_fig4",
      "Jflower: blossom 0,1,2,3,4 with base 0 and the alternating walk "
      "0,5,9,10,14,13,9,10,14,13,9,10,6,7,8,11,7,6,1,2,12",
      17,
      {{1, 0}, {0, 4}, {2, 3}, {7, 8}, {5, 9}, {6, 10}, {11, 1},
       {2, 12}, {9, 13}, {10, 14}, {4, 15}, {16, 13}, {11, 12}, {0, 8},
       {4, 9}, {1, 3}, {1, 7}, {11, 7}, {6, 1}},
      {{0, 5}, {1, 2}, {3, 4}, {6, 7}, {9, 10}, {8, 11}, {14, 13}, {15, 16}});
}

Fixture posy_fig5() {
  return make("posy_fig5",
              "posy: blossoms 9,5,4 and 1,2,3,4,5 with link "
              "9,8,5,4,3,2,0,1; Tposy link 9,8,7,6,0,1",
              10,
              {{1, 2}, {1, 5}, {3, 4}, {0, 6}, {7, 8}, {9, 5}, {9, 4}, {0, 5},
               {5, 8}, {2, 0}},
              {{2, 3}, {4, 5}, {1, 0}, {6, 7}, {8, 9}});
}

Fixture tposy_case1() {
  return make("tposy_case1_fig6",
              "Tposy-graph (blossoms 0,1,2 and 5,6,7, link 2,3,4,5) with "
              "ears 2,8,9,3 and 3,10,11,4 and 3,12,13,5",
              14,
              {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7},
               {7, 5}, {2, 8}, {8, 9}, {9, 3}, {3, 10}, {10, 11}, {11, 4},
               {3, 12}, {12, 13}, {13, 5}},
              {{0, 1}, {2, 3}, {5, 4}, {6, 7}, {8, 9}, {10, 11}, {12, 13}});
}

Fixture tposy_case2() {
  return make("tposy_case2_fig7",
              "Tposy-graph with ears 2,17,16,3 and 9,14,15,10 and 6,18,19,8",
              20,
              {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8},
               {8, 9}, {10, 9}, {10, 0}, {0, 11}, {11, 12}, {12, 13}, {13, 11},
               {14, 9}, {10, 15}, {15, 14}, {3, 16}, {16, 17}, {17, 2},
               {18, 19}, {6, 18}, {19, 8}},
              {{0, 11}, {12, 13}, {1, 2}, {3, 4}, {5, 6}, {7, 8}, {9, 10},
               {18, 19}, {14, 15}, {16, 17}});
}

Fixture tposy_case3() {
  return make("tposy_case3_fig8",
              "Tposy-graph with ears 2,16,17,9 and 8,14,15,10 and 2,18,19,10 "
              "and 8,20,21,11",
              22,
              {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8},
               {8, 0}, {0, 9}, {10, 9}, {10, 11}, {11, 12}, {12, 13}, {13, 11},
               {8, 14}, {14, 15}, {10, 15}, {2, 16}, {16, 17}, {17, 9},
               {2, 18}, {18, 19}, {19, 10}, {8, 20}, {20, 21}, {11, 21}},
              {{0, 9}, {10, 11}, {12, 13}, {1, 2}, {3, 4}, {6, 5}, {7, 8},
               {16, 17}, {18, 19}, {14, 15}, {20, 21}});
}

Fixture tposy_case4() {
  return make("tposy_case4_fig9",
              "Tposy-graph with ears 2,11,13,7 and 2,10,12,6 and 4,14,15,9 "
              "and 4,16,17,8",
              18,
              {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {5, 6}, {6, 7},
               {7, 8}, {8, 9}, {9, 5}, {2, 10}, {2, 11}, {10, 12}, {11, 13},
               {12, 6}, {13, 7}, {14, 15}, {16, 17}, {4, 14}, {15, 9},
               {4, 16}, {17, 8}},
              {{16, 17}, {0, 5}, {10, 12}, {11, 13}, {14, 15}, {2, 1}, {6, 7},
               {9, 8}, {3, 4}});
}

struct Entry {
  std::string_view name;
  Fixture (*make)();
};

constexpr std::array<Entry, 7> kFixtures{{
    {"edmonds_fig1", edmonds_fig1},
    {"jflower_fig4", jflower_fig4},
    {"posy_fig5", posy_fig5},
    {"tposy_case1_fig6", tposy_case1},
    {"tposy_case2_fig7", tposy_case2},
    {"tposy_case3_fig8", tposy_case3},
    {"tposy_case4_fig9", tposy_case4},
}};

}  // namespace

Fixture named_fixture(std::string_view name) {
  for (const Entry& e : kFixtures) {
    if (e.name == name) return e.make();
  }
  throw DomainError("unknown fixture '" + std::string(name) + "'");
}

std::vector<std::string> fixture_names() {
  std::vector<std::string> out;
  for (const Entry& e : kFixtures) out.emplace_back(e.name);
  return out;
}

}  // namespace sdgraph
