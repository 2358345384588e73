#ifndef SDGRAPH_GRAPH_HPP_
#define SDGRAPH_GRAPH_HPP_

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "sdgraph/vertex_set.hpp"

namespace sdgraph {

// Unordered vertex pair, stored with u < v.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  constexpr Edge() = default;
  constexpr Edge(VertexId a, VertexId b)
      : u(a < b ? a : b), v(a < b ? b : a) {}

  constexpr bool has(VertexId x) const { return x == u || x == v; }
  constexpr VertexId other(VertexId x) const { return x == u ? v : u; }

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

// Finite simple undirected graph on the dense vertex range [0, order).
// Immutable once built; every mutating operation returns a new graph.
class Graph {
 public:
  static constexpr int kMaxOrder = 62;

  Graph() = default;
  // Edgeless graph of the given order.
  explicit Graph(int order);

  // Throws ValidationError on self-loops or out-of-range endpoints;
  // duplicate edges are collapsed.
  static Graph from_edges(int order, std::span<const Edge> edges);

  int order() const { return static_cast<int>(rows_.size()); }
  int size() const { return edge_count_; }

  bool adjacent(VertexId u, VertexId v) const {
    return rows_[u].contains(v);
  }
  bool has_edge(Edge e) const { return adjacent(e.u, e.v); }
  VertexSet neighbors(VertexId v) const { return rows_[v]; }
  int degree(VertexId v) const { return rows_[v].size(); }
  VertexSet vertices() const { return VertexSet::first(order()); }
  bool contains(VertexId v) const { return v >= 0 && v < order(); }

  // Sorted lexicographically.
  std::vector<Edge> edges() const;

  // Same vertex ids, extra vertices appended / edges added or removed.
  Graph with_vertices(int extra) const;
  Graph with_edge(Edge e) const;
  Graph without_edge(Edge e) const;

  // G[X]: the subgraph induced by `keep`, with vertices relabelled densely in
  // increasing order. `old_ids[i]` is the original id of new vertex i.
  Graph induced(VertexSet keep, std::vector<VertexId>* old_ids = nullptr) const;

  // Graph with the same edge set relabelled by `perm` (new id of v is
  // perm[v]).
  Graph relabeled(std::span<const VertexId> perm) const;

  bool is_connected() const;
  bool is_bipartite() const;
  // Shortest-path distance, nullopt when disconnected.
  std::optional<int> distance(VertexId from, VertexId to) const;

  // Structural check of the representation: symmetric, irreflexive.
  bool well_formed() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<VertexSet> rows_;
  int edge_count_ = 0;
};

// Named families.
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph path_graph(int n);
// Two odd cycles of lengths `a` and `b` joined by a path of `path_len` edges.
// Vertices 0..a-1 form the first cycle, the bridge leaves vertex a-1.
Graph barbell_graph(int a, int b, int path_len);

// Replaces edge uv by the path u,w1,w2,v with fresh vertices w1 = order and
// w2 = order + 1.
Graph even_subdivide(const Graph& g, Edge e);

// Adds an odd path of `length` edges from u to v whose length-1 internal
// vertices are fresh (appended in path order). u == v is allowed for
// length >= 3.
Graph attach_odd_ear(const Graph& g, VertexId u, VertexId v, int length);

// Vertex sequence helpers used by walks, paths and cycles.
using VertexSequence = std::vector<VertexId>;

// P^{-1}
VertexSequence reversed(VertexSequence path);
bool is_walk(const Graph& g, std::span<const VertexId> walk);
bool is_simple_path(const Graph& g, std::span<const VertexId> path);
// Closed sequence c0..ck-1 with an implied edge ck-1 c0, all distinct, k >= 3.
bool is_simple_cycle(const Graph& g, std::span<const VertexId> cycle);

}  // namespace sdgraph

#endif  // SDGRAPH_GRAPH_HPP_
