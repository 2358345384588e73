#include "sdgraph/ke.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "sdgraph/configurations.hpp"
#include "sdgraph/errors.hpp"

namespace sdgraph {
namespace {

void check_order(const Graph& g, int bound, const char* what) {
  if (g.order() > bound) {
    throw CapacityError(std::string(what) + ": order " +
                        std::to_string(g.order()) + " exceeds bound " +
                        std::to_string(bound));
  }
}

class IndependentSetSearch {
 public:
  explicit IndependentSetSearch(const Graph& g) : g_(g) {}

  VertexSet run() {
    expand(VertexSet{}, g_.vertices());
    return best_;
  }

 private:
  // Greedy clique cover of `cand`: an independent set takes at most one
  // vertex per clique.
  int clique_cover_bound(VertexSet cand) const {
    int cliques = 0;
    while (!cand.empty()) {
      VertexSet clique;
      VertexSet pool = cand;
      while (!pool.empty()) {
        const VertexId v = pool.front();
        clique.insert(v);
        pool = pool & g_.neighbors(v);
      }
      cand = cand - clique;
      ++cliques;
    }
    return cliques;
  }

  void expand(VertexSet chosen, VertexSet cand) {
    if (cand.empty()) {
      if (chosen.size() > best_.size()) best_ = chosen;
      return;
    }
    if (chosen.size() + clique_cover_bound(cand) <= best_.size()) return;
    // Branch on a vertex of maximum degree inside cand; vertices of degree
    // zero or one there can be taken greedily.
    VertexId pick = -1;
    int pick_deg = -1;
    for (VertexId v : cand) {
      const int d = (g_.neighbors(v) & cand).size();
      if (d <= 1) {
        expand(chosen | VertexSet::single(v), cand - g_.neighbors(v) -
                                                  VertexSet::single(v));
        return;
      }
      if (d > pick_deg) {
        pick = v;
        pick_deg = d;
      }
    }
    const VertexSet self = VertexSet::single(pick);
    expand(chosen | self, cand - g_.neighbors(pick) - self);
    expand(chosen, cand - self);
  }

  const Graph& g_;
  VertexSet best_;
};

KeVerdict base_verdict(const Graph& g, KeMethod method) {
  KeVerdict v;
  v.alpha = independence_number(g);
  v.mu = matching_number(g);
  v.tau = g.order() - v.alpha;
  v.method = method;
  return v;
}

template <typename Has>
KeVerdict configuration_verdict(const Graph& g, KeMethod method, int bound,
                                Has has) {
  KeVerdict v = base_verdict(g, method);
  for_each_maximum_matching(
      g,
      [&](const Matching& m) {
        ++v.matchings;
        if (has(m)) ++v.matchings_with_configuration;
        return true;
      },
      bound);
  v.is_ke = v.matchings_with_configuration == 0;
  return v;
}

}  // namespace

VertexSet maximum_independent_set(const Graph& g, int max_order) {
  check_order(g, max_order, "independence number");
  return IndependentSetSearch(g).run();
}

int independence_number(const Graph& g, int max_order) {
  return maximum_independent_set(g, max_order).size();
}

std::string_view to_string(KeMethod method) {
  switch (method) {
    case KeMethod::direct: return "direct";
    case KeMethod::sterboul: return "sterboul";
    case KeMethod::tposy: return "tposy";
  }
  return "?";
}

KeVerdict is_ke_direct(const Graph& g) {
  KeVerdict v = base_verdict(g, KeMethod::direct);
  v.is_ke = v.alpha + v.mu == g.order();
  return v;
}

KeVerdict is_ke_sterboul(const Graph& g, int max_order) {
  return configuration_verdict(g, KeMethod::sterboul, max_order,
                               [&](const Matching& m) {
                                 return exists_flower(g, m) ||
                                        exists_posy(g, m);
                               });
}

KeVerdict is_ke_tposy(const Graph& g, int max_order) {
  return configuration_verdict(g, KeMethod::tposy, max_order,
                               [&](const Matching& m) {
                                 return exists_flower(g, m) ||
                                        exists_tposy(g, m);
                               });
}

std::optional<VertexSequence> hamiltonian_cycle(const Graph& g) {
  check_order(g, kHamiltonianBound, "hamiltonian cycle");
  const int n = g.order();
  if (n == 2 && g.adjacent(0, 1)) return VertexSequence{0, 1};
  if (n < 3) return std::nullopt;
  // reach[mask] bit v: a path from 0 through exactly `mask` ends at v.
  const std::size_t full = std::size_t{1} << n;
  std::vector<std::uint32_t> reach(full, 0);
  reach[1] = 1;
  for (std::size_t mask = 1; mask < full; mask += 2) {
    const std::uint32_t ends = reach[mask];
    if (ends == 0) continue;
    for (VertexId v = 0; v < n; ++v) {
      if (!(ends >> v & 1U)) continue;
      for (VertexId w : g.neighbors(v)) {
        if (mask >> w & 1U) continue;
        reach[mask | (std::size_t{1} << w)] |= 1U << w;
      }
    }
  }
  const std::size_t all = full - 1;
  VertexId last = -1;
  for (VertexId v : g.neighbors(0)) {
    if (reach[all] >> v & 1U) {
      last = v;
      break;
    }
  }
  if (last < 0) return std::nullopt;
  VertexSequence cycle(n);
  std::size_t mask = all;
  VertexId cur = last;
  for (int pos = n - 1; pos > 0; --pos) {
    cycle[pos] = cur;
    const std::size_t prev = mask & ~(std::size_t{1} << cur);
    for (VertexId w : g.neighbors(cur)) {
      if ((prev >> w & 1U) && (reach[prev] >> w & 1U)) {
        cur = w;
        break;
      }
    }
    mask = prev;
  }
  cycle[0] = 0;
  return cycle;
}

bool is_hamiltonian(const Graph& g) { return hamiltonian_cycle(g).has_value(); }

}  // namespace sdgraph
