#ifndef SDGRAPH_IO_HPP_
#define SDGRAPH_IO_HPP_

#include <cstdint>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "sdgraph/graph.hpp"

namespace sdgraph {

// Result of reading an edge list with arbitrary nonnegative ids.
struct ParsedGraph {
  Graph graph;
  // labels[i] is the input id of dense vertex i; labels are ascending.
  std::vector<std::uint64_t> labels;
};

// Edge-list text: one record per line ("u v" for an edge, a single "u"
// declares an isolated vertex). ',' and ';' also separate records so that
// inline lists such as "0 1, 1 2" work. '#' starts a comment.
ParsedGraph parse_edge_list(std::string_view text);

std::string to_edge_list(const Graph& g);

// graph6 short form (order <= 62). Trailing newline / whitespace is ignored.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

// One graph6 record per non-empty line; an optional ">>graph6<<" header
// prefix is accepted.
std::vector<Graph> read_graph6_stream(std::istream& in);

}  // namespace sdgraph

#endif  // SDGRAPH_IO_HPP_
