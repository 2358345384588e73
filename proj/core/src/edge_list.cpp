#include <algorithm>
#include <charconv>
#include <sstream>
#include <string>

#include "sdgraph/errors.hpp"
#include "sdgraph/io.hpp"

namespace sdgraph {
namespace {

std::uint64_t parse_id(std::string_view token, int line) {
  std::uint64_t value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw ParseError("expected a nonnegative integer, got '" +
                         std::string(token) + "'",
                     line);
  }
  return value;
}

std::vector<std::string_view> split_tokens(std::string_view record) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < record.size()) {
    while (i < record.size() &&
           (record[i] == ' ' || record[i] == '\t' || record[i] == '\r')) {
      ++i;
    }
    std::size_t j = i;
    while (j < record.size() && record[j] != ' ' && record[j] != '\t' &&
           record[j] != '\r') {
      ++j;
    }
    if (j > i) tokens.push_back(record.substr(i, j - i));
    i = j;
  }
  return tokens;
}

}  // namespace

ParsedGraph parse_edge_list(std::string_view text) {
  struct RawEdge {
    std::uint64_t a, b;
    int line;
  };
  std::vector<RawEdge> raw;
  std::vector<std::uint64_t> ids;

  int line = 1;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find_first_of("\n,;", start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view record = text.substr(start, end - start);
    if (auto hash = record.find('#'); hash != std::string_view::npos) {
      record = record.substr(0, hash);
    }
    auto tokens = split_tokens(record);
    if (tokens.size() == 1) {
      ids.push_back(parse_id(tokens[0], line));
    } else if (tokens.size() == 2) {
      RawEdge e{parse_id(tokens[0], line), parse_id(tokens[1], line), line};
      if (e.a == e.b) {
        throw ValidationError("line " + std::to_string(line) +
                              ": self-loop at vertex " + std::to_string(e.a));
      }
      ids.push_back(e.a);
      ids.push_back(e.b);
      raw.push_back(e);
    } else if (tokens.size() > 2) {
      throw ParseError("expected 'u v', got " + std::to_string(tokens.size()) +
                           " tokens",
                       line);
    }
    if (end < text.size() && text[end] == '\n') ++line;
    start = end + 1;
  }

  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  if (ids.size() > static_cast<std::size_t>(Graph::kMaxOrder)) {
    throw CapacityError("edge list has " + std::to_string(ids.size()) +
                        " vertices; maximum is " +
                        std::to_string(Graph::kMaxOrder));
  }
  auto dense = [&](std::uint64_t id) {
    return static_cast<VertexId>(
        std::lower_bound(ids.begin(), ids.end(), id) - ids.begin());
  };
  std::vector<Edge> edges;
  edges.reserve(raw.size());
  for (const RawEdge& e : raw) edges.emplace_back(dense(e.a), dense(e.b));
  return {Graph::from_edges(static_cast<int>(ids.size()), edges),
          std::move(ids)};
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  VertexSet covered;
  for (const Edge& e : g.edges()) {
    out << e.u << ' ' << e.v << '\n';
    covered.insert(e.u);
    covered.insert(e.v);
  }
  for (VertexId v : g.vertices() - covered) out << v << '\n';
  return out.str();
}

}  // namespace sdgraph
