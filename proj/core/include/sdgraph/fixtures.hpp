#ifndef SDGRAPH_FIXTURES_HPP_
#define SDGRAPH_FIXTURES_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "sdgraph/graph.hpp"

namespace sdgraph {

// A hand-transcribed example graph together with the maximum matching drawn
// alongside it.
struct Fixture {
  std::string name;
  std::string description;
  Graph graph;
  std::vector<Edge> matching;
};

// Known names:
//   edmonds_fig1      two blossoms (bases 0 and 2) and a flower with stem 0,1,2
//   jflower_fig4      17 vertices, Jflower from base 0 to unmatched vertex 12
//   posy_fig5         10 vertices with a perfect matching, posy / Tposy / Jposy
//   tposy_case1_fig6  barbell Tposy-graph with ears 2,8,9,3 / 3,10,11,4 /
//                     3,12,13,5
//   tposy_case2_fig7  ears 2,17,16,3 / 9,14,15,10 / 6,18,19,8
//   tposy_case3_fig8  ears 2,16,17,9 / 8,14,15,10 / 2,18,19,10 / 8,20,21,11
//   tposy_case4_fig9  ears 2,11,13,7 / 2,10,12,6 / 4,14,15,9 / 4,16,17,8
// Throws DomainError for an unknown name.
Fixture named_fixture(std::string_view name);

std::vector<std::string> fixture_names();

}  // namespace sdgraph

#endif  // SDGRAPH_FIXTURES_HPP_
