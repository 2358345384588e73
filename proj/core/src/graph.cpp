#include "sdgraph/graph.hpp"

#include <algorithm>
#include <string>

#include "sdgraph/errors.hpp"

namespace sdgraph {
namespace {

void check_order(int order) {
  if (order < 0 || order > Graph::kMaxOrder) {
    throw CapacityError("graph order " + std::to_string(order) +
                        " outside [0, " + std::to_string(Graph::kMaxOrder) +
                        "]");
  }
}

}  // namespace

Graph::Graph(int order) {
  check_order(order);
  rows_.assign(order, VertexSet{});
}

Graph Graph::from_edges(int order, std::span<const Edge> edges) {
  Graph g(order);
  for (const Edge& e : edges) {
    if (e.u == e.v) {
      throw ValidationError("self-loop at vertex " + std::to_string(e.u));
    }
    if (e.u < 0 || e.v >= order) {
      throw ValidationError("edge " + std::to_string(e.u) + "-" +
                            std::to_string(e.v) + " outside vertex range");
    }
    if (!g.rows_[e.u].contains(e.v)) {
      g.rows_[e.u].insert(e.v);
      g.rows_[e.v].insert(e.u);
      ++g.edge_count_;
    }
  }
  return g;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (VertexId u = 0; u < order(); ++u) {
    for (VertexId v : rows_[u] - VertexSet::first(u + 1)) out.emplace_back(u, v);
  }
  return out;
}

Graph Graph::with_vertices(int extra) const {
  check_order(order() + extra);
  Graph g = *this;
  g.rows_.resize(order() + extra);
  return g;
}

Graph Graph::with_edge(Edge e) const {
  if (e.u == e.v) {
    throw ValidationError("self-loop at vertex " + std::to_string(e.u));
  }
  if (!contains(e.u) || !contains(e.v)) {
    throw DomainError("edge endpoint outside vertex range");
  }
  Graph g = *this;
  if (!g.rows_[e.u].contains(e.v)) {
    g.rows_[e.u].insert(e.v);
    g.rows_[e.v].insert(e.u);
    ++g.edge_count_;
  }
  return g;
}

Graph Graph::without_edge(Edge e) const {
  if (!contains(e.u) || !contains(e.v) || !adjacent(e.u, e.v)) {
    throw DomainError("edge " + std::to_string(e.u) + "-" +
                      std::to_string(e.v) + " is not in the graph");
  }
  Graph g = *this;
  g.rows_[e.u].erase(e.v);
  g.rows_[e.v].erase(e.u);
  --g.edge_count_;
  return g;
}

Graph Graph::induced(VertexSet keep, std::vector<VertexId>* old_ids) const {
  keep &= vertices();
  std::vector<VertexId> ids = keep.to_vector();
  std::vector<VertexId> new_id(order(), -1);
  for (int i = 0; i < static_cast<int>(ids.size()); ++i) new_id[ids[i]] = i;
  std::vector<Edge> kept;
  for (const Edge& e : edges()) {
    if (keep.contains(e.u) && keep.contains(e.v)) {
      kept.emplace_back(new_id[e.u], new_id[e.v]);
    }
  }
  if (old_ids != nullptr) *old_ids = ids;
  return from_edges(static_cast<int>(ids.size()), kept);
}

Graph Graph::relabeled(std::span<const VertexId> perm) const {
  std::vector<Edge> moved;
  moved.reserve(edge_count_);
  for (const Edge& e : edges()) moved.emplace_back(perm[e.u], perm[e.v]);
  return from_edges(order(), moved);
}

bool Graph::is_connected() const {
  if (order() == 0) return true;
  VertexSet seen = VertexSet::single(0);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (VertexId v : frontier) next |= rows_[v];
    frontier = next - seen;
    seen |= next;
  }
  return seen == vertices();
}

bool Graph::is_bipartite() const {
  std::vector<int> side(order(), -1);
  for (VertexId s = 0; s < order(); ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    std::vector<VertexId> stack{s};
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (VertexId u : rows_[v]) {
        if (side[u] == -1) {
          side[u] = 1 - side[v];
          stack.push_back(u);
        } else if (side[u] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::optional<int> Graph::distance(VertexId from, VertexId to) const {
  VertexSet seen = VertexSet::single(from);
  VertexSet frontier = seen;
  for (int d = 0; !frontier.empty(); ++d) {
    if (frontier.contains(to)) return d;
    VertexSet next;
    for (VertexId v : frontier) next |= rows_[v];
    frontier = next - seen;
    seen |= next;
  }
  return std::nullopt;
}

bool Graph::well_formed() const {
  int twice = 0;
  for (VertexId v = 0; v < order(); ++v) {
    if (rows_[v].contains(v) || !rows_[v].subset_of(vertices())) return false;
    for (VertexId u : rows_[v]) {
      if (!rows_[u].contains(v)) return false;
    }
    twice += rows_[v].size();
  }
  return twice == 2 * edge_count_;
}

Graph cycle_graph(int n) {
  if (n < 3) throw DomainError("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, edges);
}

Graph complete_graph(int n) {
  if (n < 0) throw DomainError("negative order");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return Graph::from_edges(n, edges);
}

Graph path_graph(int n) {
  if (n < 1) throw DomainError("path needs at least 1 vertex");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edges(n, edges);
}

Graph barbell_graph(int a, int b, int path_len) {
  if (a < 3 || b < 3 || a % 2 == 0 || b % 2 == 0) {
    throw DomainError("barbell cycles must be odd with length >= 3");
  }
  if (path_len < 1) throw DomainError("barbell path needs at least one edge");
  const int n = a + b + path_len - 1;
  std::vector<Edge> edges;
  for (int i = 0; i < a; ++i) edges.emplace_back(i, (i + 1) % a);
  // bridge a-1 -> a -> ... -> a + path_len - 1 (first vertex of cycle two)
  for (int i = 0; i < path_len; ++i) edges.emplace_back(a - 1 + i, a + i);
  const int s = a + path_len - 1;
  for (int i = 0; i < b; ++i) edges.emplace_back(s + i, s + (i + 1) % b);
  return Graph::from_edges(n, edges);
}

Graph even_subdivide(const Graph& g, Edge e) {
  if (!g.contains(e.u) || !g.contains(e.v) || !g.adjacent(e.u, e.v)) {
    throw DomainError("cannot subdivide " + std::to_string(e.u) + "-" +
                      std::to_string(e.v) + ": not an edge");
  }
  const VertexId w1 = g.order();
  const VertexId w2 = g.order() + 1;
  return g.without_edge(e)
      .with_vertices(2)
      .with_edge({e.u, w1})
      .with_edge({w1, w2})
      .with_edge({w2, e.v});
}

Graph attach_odd_ear(const Graph& g, VertexId u, VertexId v, int length) {
  if (!g.contains(u) || !g.contains(v)) {
    throw DomainError("ear endpoint outside vertex range");
  }
  if (length < 1 || length % 2 == 0) {
    throw DomainError("ear length must be odd and positive, got " +
                      std::to_string(length));
  }
  if (u == v && length == 1) {
    throw DomainError("closed ear of length 1 would be a loop");
  }
  if (length == 1 && g.adjacent(u, v)) {
    throw DomainError("length-1 ear between adjacent vertices would be a "
                      "parallel edge");
  }
  Graph out = g.with_vertices(length - 1);
  VertexId prev = u;
  for (int i = 0; i < length - 1; ++i) {
    const VertexId fresh = g.order() + i;
    out = out.with_edge({prev, fresh});
    prev = fresh;
  }
  return out.with_edge({prev, v});
}

VertexSequence reversed(VertexSequence path) {
  std::reverse(path.begin(), path.end());
  return path;
}

bool is_walk(const Graph& g, std::span<const VertexId> walk) {
  if (walk.empty()) return false;
  for (VertexId v : walk) {
    if (!g.contains(v)) return false;
  }
  for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
    if (!g.adjacent(walk[i], walk[i + 1])) return false;
  }
  return true;
}

bool is_simple_path(const Graph& g, std::span<const VertexId> path) {
  if (!is_walk(g, path)) return false;
  VertexSet seen;
  for (VertexId v : path) {
    if (seen.contains(v)) return false;
    seen.insert(v);
  }
  return true;
}

bool is_simple_cycle(const Graph& g, std::span<const VertexId> cycle) {
  if (cycle.size() < 3 || !is_simple_path(g, cycle)) return false;
  return g.adjacent(cycle.front(), cycle.back());
}

}  // namespace sdgraph
