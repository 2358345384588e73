#include <string>

#include "sdgraph/errors.hpp"
#include "sdgraph/io.hpp"

namespace sdgraph {
namespace {

// Bits are packed in the column order of the upper triangle:
// (0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ...
constexpr int kBitsPerChar = 6;

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' ||
                        s.back() == ' ' || s.back() == '\t')) {
    s.remove_suffix(1);
  }
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  return s;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  text = trim(text);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) throw ParseError("empty graph6 string");
  const int head = static_cast<unsigned char>(text[0]);
  if (head == 126) throw ParseError("graph6 long form (order > 62) unsupported");
  if (head < 63 || head > 125) throw ParseError("bad graph6 order byte");
  const int n = head - 63;
  const int bits = n * (n - 1) / 2;
  const std::size_t want = 1 + (bits + kBitsPerChar - 1) / kBitsPerChar;
  if (text.size() != want) {
    throw ParseError("graph6 of order " + std::to_string(n) + " needs " +
                     std::to_string(want) + " bytes, got " +
                     std::to_string(text.size()));
  }
  std::vector<Edge> edges;
  int k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int c = static_cast<unsigned char>(text[1 + k / kBitsPerChar]);
      if (c < 63 || c > 126) throw ParseError("bad graph6 data byte");
      const int bit = (c - 63) >> (kBitsPerChar - 1 - k % kBitsPerChar);
      if (bit & 1) edges.emplace_back(i, j);
    }
  }
  // Padding bits must be zero in canonical encodings.
  for (; k % kBitsPerChar != 0; ++k) {
    const int c = static_cast<unsigned char>(text[1 + k / kBitsPerChar]);
    if (((c - 63) >> (kBitsPerChar - 1 - k % kBitsPerChar)) & 1) {
      throw ParseError("nonzero graph6 padding bits");
    }
  }
  return Graph::from_edges(n, edges);
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out(1, static_cast<char>(63 + n));
  int acc = 0;
  int k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (k % kBitsPerChar == kBitsPerChar - 1) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
      }
    }
  }
  if (k % kBitsPerChar != 0) {
    acc <<= kBitsPerChar - k % kBitsPerChar;
    out.push_back(static_cast<char>(63 + acc));
  }
  return out;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view record = trim(line);
    if (record.empty()) continue;
    try {
      out.push_back(parse_graph6(record));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line_no);
    }
  }
  return out;
}

}  // namespace sdgraph
