#include "sdgraph/matching.hpp"

#include <deque>
#include <string>

#include "sdgraph/errors.hpp"

namespace sdgraph {

Matching::Matching(int order) : mate_(order) {
  for (VertexId v = 0; v < order; ++v) mate_[v] = v;
}

Matching Matching::from_edges(const Graph& g, std::span<const Edge> edges) {
  Matching m(g.order());
  for (const Edge& e : edges) {
    if (!g.contains(e.u) || !g.contains(e.v) || !g.adjacent(e.u, e.v)) {
      throw ValidationError("matching edge " + std::to_string(e.u) + "-" +
                            std::to_string(e.v) + " is not an edge");
    }
    if (m.contains(e)) continue;
    if (m.is_matched(e.u) || m.is_matched(e.v)) {
      throw ValidationError("matching edges overlap at edge " +
                            std::to_string(e.u) + "-" + std::to_string(e.v));
    }
    m.mate_[e.u] = e.v;
    m.mate_[e.v] = e.u;
    ++m.size_;
  }
  return m;
}

Matching Matching::from_mates(std::vector<VertexId> mates) {
  Matching m;
  const int n = static_cast<int>(mates.size());
  int matched = 0;
  for (VertexId v = 0; v < n; ++v) {
    const VertexId u = mates[v];
    if (u < 0 || u >= n || mates[u] != v) {
      throw ValidationError("mate array is not an involution at vertex " +
                            std::to_string(v));
    }
    if (u != v) ++matched;
  }
  m.mate_ = std::move(mates);
  m.size_ = matched / 2;
  return m;
}

VertexSet Matching::saturated() const {
  VertexSet s;
  for (VertexId v = 0; v < order(); ++v) {
    if (is_matched(v)) s.insert(v);
  }
  return s;
}

VertexSet Matching::exposed() const {
  return VertexSet::first(order()) - saturated();
}

std::vector<Edge> Matching::edges() const {
  std::vector<Edge> out;
  for (VertexId v = 0; v < order(); ++v) {
    if (mate_[v] > v) out.emplace_back(v, mate_[v]);
  }
  return out;
}

std::vector<Edge> Matching::edges_within(std::span<const Edge> subgraph) const {
  std::vector<Edge> out;
  for (const Edge& e : subgraph) {
    if (contains(e)) out.push_back(e);
  }
  return out;
}

bool is_matching_of(const Graph& g, const Matching& m) {
  if (m.order() != g.order()) return false;
  for (const Edge& e : m.edges()) {
    if (!g.adjacent(e.u, e.v)) return false;
  }
  return true;
}

namespace {

// Edmonds' augmenting-path search with blossom shrinking, restricted to the
// vertices in `allowed`.
class BlossomSearch {
 public:
  BlossomSearch(const Graph& g, VertexSet allowed, std::vector<VertexId> mate)
      : g_(g), allowed_(allowed), n_(g.order()), mate_(std::move(mate)) {}

  // Returns the exposed endpoint of an augmenting path from `root`, or -1.
  // On success parent_ describes the path.
  VertexId find_path(VertexId root) {
    used_.assign(n_, false);
    parent_.assign(n_, -1);
    base_.resize(n_);
    for (VertexId i = 0; i < n_; ++i) base_[i] = i;
    used_[root] = true;
    std::deque<VertexId> queue{root};
    while (!queue.empty()) {
      const VertexId v = queue.front();
      queue.pop_front();
      for (VertexId to : g_.neighbors(v) & allowed_) {
        if (base_[v] == base_[to] || mate_[v] == to) continue;
        if (to == root || (mate_[to] != -1 && parent_[mate_[to]] != -1)) {
          const VertexId cur = lca(v, to);
          in_blossom_.assign(n_, false);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (VertexId i = 0; i < n_; ++i) {
            if (allowed_.contains(i) && in_blossom_[base_[i]]) {
              base_[i] = cur;
              if (!used_[i]) {
                used_[i] = true;
                queue.push_back(i);
              }
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (mate_[to] == -1) return to;
          used_[mate_[to]] = true;
          queue.push_back(mate_[to]);
        }
      }
    }
    return -1;
  }

  void augment(VertexId end) {
    while (end != -1) {
      const VertexId pv = parent_[end];
      const VertexId next = mate_[pv];
      mate_[end] = pv;
      mate_[pv] = end;
      end = next;
    }
  }

  // Grows the current matching to a maximum one on `allowed`.
  int run() {
    int size = 0;
    for (VertexId v : allowed_) {
      if (mate_[v] != -1 && v < mate_[v]) ++size;
    }
    for (VertexId v : allowed_) {
      if (mate_[v] != -1) continue;
      if (VertexId end = find_path(v); end != -1) {
        augment(end);
        ++size;
      }
    }
    return size;
  }

  const std::vector<VertexId>& mate() const { return mate_; }

 private:
  VertexId lca(VertexId a, VertexId b) {
    std::vector<bool> seen(n_, false);
    for (;;) {
      a = base_[a];
      seen[a] = true;
      if (mate_[a] == -1) break;
      a = parent_[mate_[a]];
    }
    for (;;) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[mate_[b]];
    }
  }

  void mark_path(VertexId v, VertexId b, VertexId child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = true;
      in_blossom_[base_[mate_[v]]] = true;
      parent_[v] = child;
      child = mate_[v];
      v = parent_[mate_[v]];
    }
  }

  const Graph& g_;
  VertexSet allowed_;
  int n_;
  std::vector<VertexId> mate_;  // -1 when exposed
  std::vector<VertexId> parent_;
  std::vector<VertexId> base_;
  std::vector<bool> used_;
  std::vector<bool> in_blossom_;
};

std::vector<VertexId> empty_mates(int n) { return std::vector<VertexId>(n, -1); }

int residual_matching_number(const Graph& g, VertexSet allowed) {
  BlossomSearch search(g, allowed, empty_mates(g.order()));
  return search.run();
}

Matching to_matching(const std::vector<VertexId>& mates) {
  std::vector<VertexId> involution(mates.size());
  for (std::size_t v = 0; v < mates.size(); ++v) {
    involution[v] = mates[v] == -1 ? static_cast<VertexId>(v) : mates[v];
  }
  return Matching::from_mates(std::move(involution));
}

}  // namespace

Matching maximum_matching(const Graph& g) {
  BlossomSearch search(g, g.vertices(), empty_mates(g.order()));
  search.run();
  return to_matching(search.mate());
}

int matching_number(const Graph& g) {
  return residual_matching_number(g, g.vertices());
}

bool is_maximum(const Graph& g, const Matching& m) {
  if (!is_matching_of(g, m)) {
    throw DomainError("not a matching of the given graph");
  }
  std::vector<VertexId> mates(g.order());
  for (VertexId v = 0; v < g.order(); ++v) {
    mates[v] = m.is_matched(v) ? m.mate(v) : -1;
  }
  BlossomSearch search(g, g.vertices(), mates);
  for (VertexId v : m.exposed()) {
    if (search.find_path(v) != -1) return false;
  }
  return true;
}

namespace {

class MatchingEnumerator {
 public:
  MatchingEnumerator(const Graph& g,
                     const std::function<bool(const Matching&)>& visit)
      : g_(g), visit_(visit), target_(matching_number(g)),
        perfect_(2 * target_ == g.order()) {
    mates_.resize(g.order());
    for (VertexId v = 0; v < g.order(); ++v) mates_[v] = v;
  }

  bool run() { return branch(g_.vertices(), 0); }

 private:
  // `open`: undecided vertices; `chosen`: edges picked so far.
  bool branch(VertexSet open, int chosen) {
    if (chosen == target_) return visit_(Matching::from_mates(mates_));
    if (open.empty()) return true;
    if (chosen + residual_matching_number(g_, open) < target_) return true;
    const VertexId v = open.front();
    const VertexSet rest = open - VertexSet::single(v);
    for (VertexId u : g_.neighbors(v) & rest) {
      mates_[v] = u;
      mates_[u] = v;
      const bool go_on =
          branch(rest - VertexSet::single(u), chosen + 1);
      mates_[v] = v;
      mates_[u] = u;
      if (!go_on) return false;
    }
    // With a perfect target every vertex must be covered.
    if (!perfect_) return branch(rest, chosen);
    return true;
  }

  const Graph& g_;
  const std::function<bool(const Matching&)>& visit_;
  int target_;
  bool perfect_;
  std::vector<VertexId> mates_;
};

}  // namespace

bool for_each_maximum_matching(
    const Graph& g, const std::function<bool(const Matching&)>& visit,
    int max_order) {
  if (g.order() > max_order) {
    throw CapacityError("matching enumeration bound is order " +
                        std::to_string(max_order) + ", graph has order " +
                        std::to_string(g.order()));
  }
  return MatchingEnumerator(g, visit).run();
}

std::vector<Matching> enumerate_maximum_matchings(const Graph& g,
                                                  int max_order) {
  std::vector<Matching> out;
  for_each_maximum_matching(
      g,
      [&out](const Matching& m) {
        out.push_back(m);
        return true;
      },
      max_order);
  return out;
}

Matching rotate(const Graph& g, const Matching& m,
                std::span<const VertexId> cycle) {
  std::vector<VertexId> c(cycle.begin(), cycle.end());
  if (c.size() > 1 && c.front() == c.back()) c.pop_back();
  if (!is_simple_cycle(g, c)) {
    throw DomainError("rotation needs a simple cycle of the graph");
  }
  if (c.size() % 2 != 0) throw DomainError("rotation cycle has odd length");
  const std::size_t k = c.size();
  std::vector<VertexId> mates(m.order());
  for (VertexId v = 0; v < m.order(); ++v) mates[v] = m.mate(v);
  for (std::size_t i = 0; i < k; ++i) {
    const bool here = m.contains(c[i], c[(i + 1) % k]);
    const bool next = m.contains(c[(i + 1) % k], c[(i + 2) % k]);
    if (here == next) {
      throw DomainError("cycle is not alternating at vertex " +
                        std::to_string(c[(i + 1) % k]));
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (!m.contains(c[i], c[(i + 1) % k])) {
      mates[c[i]] = c[(i + 1) % k];
      mates[c[(i + 1) % k]] = c[i];
    }
  }
  return Matching::from_mates(std::move(mates));
}

}  // namespace sdgraph
