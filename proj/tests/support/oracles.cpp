#include "oracles.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <map>

namespace oracle {
namespace {

bool edge_matched(const Matching& m, VertexId a, VertexId b) {
  return m.is_matched(a) && m.mate(a) == b;
}

}  // namespace

std::vector<Matching> maximum_matchings(const Graph& g) {
  const std::vector<sdgraph::Edge> edges = g.edges();
  std::vector<std::vector<sdgraph::Edge>> best;
  std::size_t best_size = 0;
  std::vector<sdgraph::Edge> current;
  std::function<void(std::size_t, VertexSet)> rec = [&](std::size_t i,
                                                        VertexSet used) {
    if (i == edges.size()) {
      if (current.size() > best_size) {
        best_size = current.size();
        best.clear();
      }
      if (current.size() == best_size) best.push_back(current);
      return;
    }
    rec(i + 1, used);
    const sdgraph::Edge e = edges[i];
    if (!used.contains(e.u) && !used.contains(e.v)) {
      current.push_back(e);
      VertexSet next = used;
      next.insert(e.u);
      next.insert(e.v);
      rec(i + 1, next);
      current.pop_back();
    }
  };
  rec(0, VertexSet{});
  std::vector<Matching> out;
  for (const auto& es : best) out.push_back(Matching::from_edges(g, es));
  return out;
}

int matching_number(const Graph& g) {
  return static_cast<int>(maximum_matchings(g).front().edges().size());
}

int independence_number(const Graph& g) {
  const int n = g.order();
  int best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bool independent = true;
    for (int a = 0; a < n && independent; ++a) {
      if (!(mask >> a & 1U)) continue;
      for (int b = a + 1; b < n; ++b) {
        if ((mask >> b & 1U) && g.adjacent(a, b)) {
          independent = false;
          break;
        }
      }
    }
    if (independent) best = std::max(best, std::popcount(mask));
  }
  return best;
}

bool walk_exists(const Graph& g, const Matching& m, VertexId from,
                 VertexId to, WalkClass cls) {
  const int n = g.order();
  const Parity first = sdgraph::first_parity(cls);
  const Parity last = sdgraph::last_parity(cls);
  // layer[v][p]: some walk of the current length ends at v, last edge p.
  std::vector<std::array<bool, 2>> layer(n, {false, false});
  for (VertexId w : g.neighbors(from)) {
    const Parity p = edge_matched(m, from, w) ? Parity::matched
                                              : Parity::unmatched;
    if (p == first) layer[w][static_cast<int>(p)] = true;
  }
  for (int len = 1; len <= 4 * n; ++len) {
    if (layer[to][static_cast<int>(last)]) return true;
    std::vector<std::array<bool, 2>> next(n, {false, false});
    for (VertexId v = 0; v < n; ++v) {
      for (int p = 0; p < 2; ++p) {
        if (!layer[v][p]) continue;
        for (VertexId w : g.neighbors(v)) {
          const int q = edge_matched(m, v, w) ? 1 : 0;
          if (q != p) next[w][q] = true;
        }
      }
    }
    layer = std::move(next);
  }
  return false;
}

std::vector<VertexSequence> simple_paths_from(const Graph& g,
                                              VertexId from) {
  std::vector<VertexSequence> out;
  VertexSequence path{from};
  std::function<void()> rec = [&]() {
    for (VertexId w : g.neighbors(path.back())) {
      if (std::find(path.begin(), path.end(), w) != path.end()) continue;
      path.push_back(w);
      out.push_back(path);
      rec();
      path.pop_back();
    }
  };
  rec();
  return out;
}

bool alternates(const Matching& m, const VertexSequence& walk) {
  for (std::size_t i = 2; i < walk.size(); ++i) {
    if (edge_matched(m, walk[i - 2], walk[i - 1]) ==
        edge_matched(m, walk[i - 1], walk[i])) {
      return false;
    }
  }
  return true;
}

std::vector<CycleWithBase> blossoms(const Graph& g, const Matching& m) {
  std::set<VertexSequence> cycles;
  for (VertexId s = 0; s < g.order(); ++s) {
    for (const VertexSequence& p : simple_paths_from(g, s)) {
      if (p.size() < 3 || !g.adjacent(p.back(), s)) continue;
      if (*std::min_element(p.begin(), p.end()) != s) continue;
      if (p[1] > p.back()) continue;  // keep one direction
      cycles.insert(p);
    }
  }
  std::vector<CycleWithBase> out;
  for (const VertexSequence& c : cycles) {
    const std::size_t len = c.size();
    if (len % 2 == 0) continue;
    std::size_t matched = 0;
    std::vector<VertexId> bases;
    for (std::size_t i = 0; i < len; ++i) {
      const VertexId a = c[i];
      const VertexId b = c[(i + 1) % len];
      const VertexId prev = c[(i + len - 1) % len];
      if (edge_matched(m, a, b)) ++matched;
      if (!edge_matched(m, a, b) && !edge_matched(m, prev, a)) {
        bases.push_back(a);
      }
    }
    if (matched != (len - 1) / 2 || bases.size() != 1) continue;
    const auto at = std::find(c.begin(), c.end(), bases[0]);
    VertexSequence rotated(at, c.end());
    rotated.insert(rotated.end(), c.begin(), at);
    out.push_back({rotated, bases[0]});
  }
  return out;
}

namespace {

VertexSet set_of(const VertexSequence& s) { return VertexSet::of(s); }

VertexSet interior_of(const VertexSequence& p) {
  VertexSet out;
  for (std::size_t i = 1; i + 1 < p.size(); ++i) out.insert(p[i]);
  return out;
}

VertexSet posy_like(const Graph& g, const Matching& m, bool tight) {
  const auto bl = blossoms(g, m);
  VertexSet out;
  for (const auto& b1 : bl) {
    for (const VertexSequence& p : simple_paths_from(g, b1.base)) {
      if ((p.size() - 1) % 2 != 1 || !alternates(m, p)) continue;
      if (!edge_matched(m, p[0], p[1]) ||
          !edge_matched(m, p[p.size() - 2], p.back())) {
        continue;
      }
      for (const auto& b2 : bl) {
        if (b2.base != p.back()) continue;
        const VertexSet s1 = set_of(b1.cycle);
        const VertexSet s2 = set_of(b2.cycle);
        if (tight && interior_of(p).intersects(s1 | s2)) continue;
        out |= s1 | s2 | set_of(p);
      }
    }
  }
  return out;
}

// Union of the vertex sets of alternating walks that leave `start` over its
// matched edge and are accepted by accept(last vertex, last edge matched?).
struct WalkState {
  VertexId v;
  int next;  // parity of the next edge (1 = matched)
  std::uint64_t mask;
  auto operator<=>(const WalkState&) const = default;
};

template <typename Accept>
VertexSet walk_marks(const Graph& g, const Matching& m, VertexId start,
                     Accept accept) {
  std::set<WalkState> seen;
  std::vector<WalkState> stack{{start, 1, std::uint64_t{1} << start}};
  seen.insert(stack.back());
  VertexSet out;
  while (!stack.empty()) {
    const WalkState s = stack.back();
    stack.pop_back();
    for (VertexId w : g.neighbors(s.v)) {
      const int q = edge_matched(m, s.v, w) ? 1 : 0;
      if (q != s.next) continue;
      const WalkState t{w, 1 - q, s.mask | (std::uint64_t{1} << w)};
      VertexSet visited;
      for (int i = 0; i < g.order(); ++i) {
        if (t.mask >> i & 1U) visited.insert(i);
      }
      out |= accept(w, q) ? visited : VertexSet{};
      if (seen.insert(t).second) stack.push_back(t);
    }
  }
  return out;
}

}  // namespace

VertexSet flower_vertices(const Graph& g, const Matching& m) {
  VertexSet out;
  for (const auto& b : blossoms(g, m)) {
    const VertexSet bs = set_of(b.cycle);
    if (!m.is_matched(b.base)) out |= bs;
    for (const VertexSequence& p : simple_paths_from(g, b.base)) {
      if ((p.size() - 1) % 2 != 0 || !alternates(m, p)) continue;
      if (m.is_matched(p.back())) continue;
      if ((set_of(p) & bs) != VertexSet::single(b.base)) continue;
      out |= bs | set_of(p);
    }
  }
  return out;
}

VertexSet posy_vertices(const Graph& g, const Matching& m) {
  return posy_like(g, m, false);
}

VertexSet tposy_vertices(const Graph& g, const Matching& m) {
  return posy_like(g, m, true);
}

VertexSet jflower_vertices(const Graph& g, const Matching& m) {
  VertexSet out;
  for (const auto& b : blossoms(g, m)) {
    const VertexSet bs = set_of(b.cycle);
    if (!m.is_matched(b.base)) {
      out |= bs;
      continue;
    }
    const VertexSet walks = walk_marks(g, m, b.base, [&](VertexId w, int) {
      return !m.is_matched(w);
    });
    if (!walks.empty()) out |= bs | walks;
  }
  return out;
}

VertexSet jposy_vertices(const Graph& g, const Matching& m) {
  const auto bl = blossoms(g, m);
  std::map<VertexId, VertexSet> at_base;
  for (const auto& b : bl) at_base[b.base] |= set_of(b.cycle);
  VertexSet out;
  for (const auto& [base, union_at_base] : at_base) {
    if (!m.is_matched(base)) continue;
    for (const auto& [other, union_other] : at_base) {
      const VertexSet walks =
          walk_marks(g, m, base, [&, o = other](VertexId w, int q) {
            return w == o && q == 1;
          });
      if (!walks.empty()) out |= union_at_base | union_other | walks;
    }
  }
  return out;
}

Graph random_connected(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  for (;;) {
    std::vector<sdgraph::Edge> edges;
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        if (coin(rng)) edges.emplace_back(a, b);
      }
    }
    Graph g = Graph::from_edges(n, edges);
    if (g.is_connected()) return g;
  }
}

}  // namespace oracle
