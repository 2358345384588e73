#ifndef SDGRAPH_MATCHING_HPP_
#define SDGRAPH_MATCHING_HPP_

#include <functional>
#include <span>
#include <vector>

#include "sdgraph/graph.hpp"

namespace sdgraph {

// A set of pairwise disjoint edges, stored as the involution
// v -> M(v) (M(v) = v when v is unmatched).
class Matching {
 public:
  Matching() = default;
  // Empty matching on `order` vertices.
  explicit Matching(int order);

  // Throws ValidationError when the edges overlap or are not edges of g.
  static Matching from_edges(const Graph& g, std::span<const Edge> edges);
  // From an involution given as a mate array (mates[v] == v when exposed).
  // Throws ValidationError when `mates` is not self-inverse.
  static Matching from_mates(std::vector<VertexId> mates);

  int order() const { return static_cast<int>(mate_.size()); }
  int size() const { return size_; }

  VertexId mate(VertexId v) const { return mate_[v]; }
  VertexId operator()(VertexId v) const { return mate_[v]; }
  bool is_matched(VertexId v) const { return mate_[v] != v; }
  bool contains(VertexId u, VertexId v) const {
    return u != v && mate_[u] == v;
  }
  bool contains(Edge e) const { return contains(e.u, e.v); }
  bool is_perfect() const { return 2 * size_ == order(); }

  VertexSet saturated() const;
  VertexSet exposed() const;
  // Sorted.
  std::vector<Edge> edges() const;
  // M(H): the matched edges among `subgraph`.
  std::vector<Edge> edges_within(std::span<const Edge> subgraph) const;

  friend bool operator==(const Matching&, const Matching&) = default;

 private:
  std::vector<VertexId> mate_;
  int size_ = 0;
};

// True when every edge of m is an edge of g and m has g's order.
bool is_matching_of(const Graph& g, const Matching& m);

// Maximum-cardinality matching by Edmonds' blossom-shrinking search.
// Exposed vertices are scanned in increasing order and neighbours in
// increasing order, so the result is deterministic.
Matching maximum_matching(const Graph& g);

// mu(G)
int matching_number(const Graph& g);

// Berge test: m is maximum iff no augmenting path leaves any exposed vertex.
// Throws DomainError when m is not a matching of g.
bool is_maximum(const Graph& g, const Matching& m);

inline constexpr int kDefaultMatchingEnumerationBound = 16;

// Every maximum matching of g, each exactly once. The search branches on the
// lowest undecided vertex (leave it exposed, or match it to each undecided
// neighbour) and prunes branches whose residual matching number cannot reach
// mu(G). Throws CapacityError when g.order() > max_order.
std::vector<Matching> enumerate_maximum_matchings(
    const Graph& g, int max_order = kDefaultMatchingEnumerationBound);

// Streaming form of enumerate_maximum_matchings (same order). The visitor
// returns false to stop; the function returns false iff it was stopped.
bool for_each_maximum_matching(
    const Graph& g, const std::function<bool(const Matching&)>& visit,
    int max_order = kDefaultMatchingEnumerationBound);

// m xor E(C) for an even M-alternating cycle C of g. The cycle may be given
// open (c0..ck-1) or closed (c0..ck-1,c0). Throws DomainError if the cycle is
// not a simple even cycle of g alternating with respect to m.
Matching rotate(const Graph& g, const Matching& m,
                std::span<const VertexId> cycle);

}  // namespace sdgraph

#endif  // SDGRAPH_MATCHING_HPP_
