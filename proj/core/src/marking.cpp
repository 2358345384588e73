#include <atomic>
#include <mutex>

#include "detail.hpp"
#include "sdgraph/configurations.hpp"
#include "sdgraph/errors.hpp"

namespace sdgraph {
namespace {

struct Marks {
  VertexSet v_t;
  VertexSet v_esg;
  VertexSet v_j;

  Marks& operator|=(const Marks& o) {
    v_t |= o.v_t;
    v_esg |= o.v_esg;
    v_j |= o.v_j;
    return *this;
  }
};

Marks marks_for(const Graph& g, const Matching& m) {
  const ConfigurationProfile p(g, m);
  const VertexSet flowers = p.flower_vertices();
  Marks out;
  out.v_t = flowers | p.tposy_vertices();
  out.v_esg = flowers | p.posy_vertices();
  out.v_j = p.jflower_vertices() | p.jposy_vertices();
  return out;
}

std::optional<Configuration> configuration_containing(const Graph& g,
                                                      const Matching& m,
                                                      VertexId v) {
  for (Flower& f : find_flowers(g, m)) {
    if (vertices_of(f).contains(v)) return Configuration{std::move(f)};
  }
  for (Tposy& t : find_tposies(g, m)) {
    if (vertices_of(t).contains(v)) return Configuration{std::move(t)};
  }
  return std::nullopt;
}

}  // namespace

MarkReport mark_vertices(const Graph& g, const MarkOptions& options) {
  MarkReport report;
  report.order = g.order();
  const VertexSet all = g.vertices();
  auto full = [&](const Marks& m) {
    return m.v_t == all && m.v_esg == all && m.v_j == all;
  };

  Marks total;
  std::vector<Matching> seen;
  if (options.threads <= 1) {
    for_each_maximum_matching(
        g,
        [&](const Matching& m) {
          total |= marks_for(g, m);
          ++report.matchings;
          if (options.witnesses) seen.push_back(m);
          return !(options.stop_when_full && full(total));
        },
        options.max_order);
  } else {
    seen = enumerate_maximum_matchings(g, options.max_order);
    std::mutex lock;
    std::atomic<bool> done{false};
    std::atomic<int> processed{0};
    detail::parallel_for(seen.size(), options.threads, [&](std::size_t i) {
      if (options.stop_when_full && done.load()) return;
      const Marks local = marks_for(g, seen[i]);
      processed.fetch_add(1);
      std::lock_guard guard(lock);
      total |= local;
      if (options.stop_when_full && full(total)) done = true;
    });
    report.matchings = processed.load();
  }
  report.v_t = total.v_t;
  report.v_esg = total.v_esg;
  report.v_j = total.v_j;

  if (options.witnesses) {
    // Sequential so the chosen witness does not depend on scheduling.
    VertexSet missing = report.v_t;
    for (const Matching& m : seen) {
      if (missing.empty()) break;
      const Marks local = marks_for(g, m);
      for (VertexId v : local.v_t & missing) {
        if (auto c = configuration_containing(g, m, v)) {
          report.witnesses.emplace(v, Witness{m, std::move(*c)});
          missing.erase(v);
        }
      }
    }
  }
  return report;
}

bool is_sd_graph(const Graph& g, int max_order) {
  // Only V_T is needed; the other two sets equal it on every graph we can
  // enumerate, and the tests check that separately.
  const VertexSet all = g.vertices();
  VertexSet marked;
  for_each_maximum_matching(
      g,
      [&](const Matching& m) {
        const ConfigurationProfile p(g, m);
        marked |= p.flower_vertices();
        if (marked != all) marked |= p.tposy_vertices();
        return marked != all;
      },
      max_order);
  return marked == all;
}

std::optional<Witness> witness_for_vertex(const Graph& g, VertexId v,
                                          int max_order) {
  if (!g.contains(v)) throw DomainError("vertex out of range");
  std::optional<Witness> found;
  bool in_vj = false;
  for_each_maximum_matching(
      g,
      [&](const Matching& m) {
        const ConfigurationProfile p(g, m);
        if (p.flower_vertices().contains(v) ||
            p.tposy_vertices().contains(v)) {
          if (auto c = configuration_containing(g, m, v)) {
            found = Witness{m, std::move(*c)};
            return false;
          }
        }
        if (p.jflower_vertices().contains(v) ||
            p.jposy_vertices().contains(v)) {
          in_vj = true;
        }
        return true;
      },
      max_order);
  if (!found && in_vj) {
    throw InvariantError("vertex " + std::to_string(v) +
                         " lies in V_J but has no flower or Tposy witness");
  }
  return found;
}

Gadget flower_gadget(const Graph& g, const Matching& m, VertexId u) {
  if (!g.contains(u)) throw DomainError("vertex out of range");
  if (!is_matching_of(g, m) || !is_maximum(g, m)) {
    throw DomainError("gadget needs a maximum matching");
  }
  if (m.is_matched(u)) throw DomainError("gadget vertex must be exposed");
  Gadget out;
  const int n = g.order();
  out.x = n;
  out.y = n + 1;
  out.z = n + 2;
  std::vector<Edge> edges = g.edges();
  edges.insert(edges.end(), {Edge(u, out.x), Edge(out.x, out.y),
                             Edge(out.x, out.z), Edge(out.y, out.z)});
  out.graph = Graph::from_edges(n + 3, edges);
  return out;
}

}  // namespace sdgraph
