#include "sdgraph/verification.hpp"

#include <sstream>

#include "detail.hpp"
#include "sdgraph/configurations.hpp"
#include "sdgraph/enumeration.hpp"
#include "sdgraph/errors.hpp"
#include "sdgraph/io.hpp"
#include "sdgraph/ke.hpp"
#include "sdgraph/matching.hpp"

namespace sdgraph {
namespace {

constexpr std::pair<std::string_view, unsigned> kCheckTable[] = {
    {"main", kCheckMain},   {"sterboul", kCheckSterboul},
    {"tposy", kCheckTposy}, {"jposy", kCheckJposy},
    {"corollary", kCheckCorollary},
};

std::string set_text(VertexSet s) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (VertexId v : s) {
    out << (first ? "" : ",") << v;
    first = false;
  }
  out << '}';
  return out.str();
}

std::string verdict_text(const KeVerdict& direct, const KeVerdict& other) {
  std::ostringstream out;
  out << "alpha=" << direct.alpha << " mu=" << direct.mu
      << " direct=" << direct.is_ke << ' ' << to_string(other.method) << '='
      << other.is_ke << " matchings=" << other.matchings
      << " with_configuration=" << other.matchings_with_configuration;
  return out.str();
}

}  // namespace

std::optional<unsigned> parse_check(std::string_view name) {
  if (name == "all") return kCheckAll;
  for (const auto& [key, bit] : kCheckTable) {
    if (key == name) return bit;
  }
  return std::nullopt;
}

std::vector<std::string> check_names(unsigned checks) {
  std::vector<std::string> out;
  for (const auto& [key, bit] : kCheckTable) {
    if (checks & bit) out.emplace_back(key);
  }
  return out;
}

void VerificationReport::merge(const VerificationReport& other) {
  graphs += other.graphs;
  for (const auto& [order, count] : other.graphs_by_order) {
    graphs_by_order[order] += count;
  }
  ke_graphs += other.ke_graphs;
  perfect_matching_graphs += other.perfect_matching_graphs;
  matchings += other.matchings;
  counterexamples.insert(counterexamples.end(), other.counterexamples.begin(),
                         other.counterexamples.end());
}

VerificationReport verify_graph(const Graph& g, unsigned checks) {
  VerificationReport r;
  r.checks = checks;
  r.graphs = 1;
  r.graphs_by_order[g.order()] = 1;
  const std::string code = to_graph6(g);
  auto fail = [&](std::string_view check, std::string detail) {
    r.counterexamples.push_back({code, std::string(check), std::move(detail)});
  };

  const KeVerdict direct = is_ke_direct(g);
  r.ke_graphs = direct.is_ke ? 1 : 0;
  const bool perfect = 2 * direct.mu == g.order();
  r.perfect_matching_graphs = perfect ? 1 : 0;

  if (checks & kCheckMain) {
    const MarkReport marks = mark_vertices(g);
    r.matchings = marks.matchings;
    if (!marks.chain_holds() || !marks.sets_agree()) {
      fail("main", "V_T=" + set_text(marks.v_t) + " V_ESG=" +
                       set_text(marks.v_esg) + " V_J=" + set_text(marks.v_j));
    }
  }
  if (checks & kCheckSterboul) {
    const KeVerdict s = is_ke_sterboul(g);
    if (s.is_ke != direct.is_ke || !s.uniform()) {
      fail("sterboul", verdict_text(direct, s));
    }
  }
  if (checks & kCheckTposy) {
    const KeVerdict t = is_ke_tposy(g);
    if (t.is_ke != direct.is_ke || !t.uniform()) {
      fail("tposy", verdict_text(direct, t));
    }
  }
  if (checks & (kCheckJposy | kCheckCorollary)) {
    std::optional<Matching> with_jposy;
    for_each_maximum_matching(g, [&](const Matching& m) {
      if (exists_jposy(g, m)) {
        with_jposy = m;
        return false;
      }
      return true;
    });
    if ((checks & kCheckJposy) && with_jposy && direct.is_ke) {
      fail("jposy", "KE graph with a Jposy under matching " +
                        to_edge_list(Graph::from_edges(
                            g.order(), with_jposy->edges())));
    }
    // For perfect-matching graphs the maximum matchings are exactly the
    // perfect matchings.
    if ((checks & kCheckCorollary) && perfect &&
        direct.is_ke == with_jposy.has_value()) {
      fail("corollary", std::string("is_ke=") +
                            (direct.is_ke ? "true" : "false") +
                            " jposy=" + (with_jposy ? "true" : "false"));
    }
  }
  return r;
}

VerificationReport verify_graphs(std::span<const Graph> graphs,
                                 unsigned checks, int threads) {
  std::vector<VerificationReport> parts(graphs.size());
  detail::parallel_for(graphs.size(), threads, [&](std::size_t i) {
    parts[i] = verify_graph(graphs[i], checks);
  });
  VerificationReport total;
  total.checks = checks;
  for (const VerificationReport& p : parts) total.merge(p);
  return total;
}

VerificationReport verify_theorems(int order_bound, unsigned checks,
                                   int threads) {
  ConnectedGraphCatalog catalog;
  VerificationReport total;
  total.name = "theorems";
  total.checks = checks;
  total.order_bound = order_bound;
  for (int n = 1; n <= order_bound; ++n) {
    total.merge(verify_graphs(catalog.of_order(n), checks, threads));
  }
  return total;
}

std::vector<Graph> ear_suite_bases(int max_order) {
  IsomorphismClasses classes;
  std::vector<Graph> frontier;
  for (const Graph& seed : {barbell_graph(3, 3, 1), complete_graph(4)}) {
    if (seed.order() <= max_order && classes.insert(seed).added) {
      frontier.push_back(seed);
    }
  }
  while (!frontier.empty()) {
    std::vector<Graph> next;
    for (const Graph& g : frontier) {
      if (g.order() + 2 > max_order) continue;
      for (Edge e : g.edges()) {
        Graph child = even_subdivide(g, e);
        if (classes.insert(child).added) next.push_back(std::move(child));
      }
    }
    frontier = std::move(next);
  }
  return classes.graphs();
}

VerificationReport verify_ear_tposy(int max_order, int max_ear_length,
                                    int threads) {
  std::vector<Graph> cases;
  for (const Graph& base : ear_suite_bases(max_order)) {
    for (VertexId u = 0; u < base.order(); ++u) {
      for (VertexId v = u; v < base.order(); ++v) {
        for (int len = 1; len <= max_ear_length; len += 2) {
          // A single edge is only an ear between distinct nonadjacent
          // vertices; anything else would be a loop or a parallel edge.
          if (len == 1 && (u == v || base.adjacent(u, v))) continue;
          cases.push_back(attach_odd_ear(base, u, v, len));
        }
      }
    }
  }
  std::vector<VerificationReport> parts(cases.size());
  detail::parallel_for(cases.size(), threads, [&](std::size_t i) {
    const Graph& g = cases[i];
    VerificationReport& r = parts[i];
    r.graphs = 1;
    r.graphs_by_order[g.order()] = 1;
    MarkOptions options;
    options.stop_when_full = true;
    const MarkReport marks = mark_vertices(g, options);
    r.matchings = marks.matchings;
    if (marks.v_t != g.vertices()) {
      r.counterexamples.push_back(
          {to_graph6(g), "eartposy",
           "outside V_T: " + set_text(g.vertices() - marks.v_t)});
    }
  });
  VerificationReport total;
  total.name = "eartposy";
  total.order_bound = max_order;
  for (const VerificationReport& p : parts) total.merge(p);
  return total;
}

std::string_view to_string(ConjectureClass c) {
  switch (c) {
    case ConjectureClass::ke: return "KE";
    case ConjectureClass::sd: return "SD";
    case ConjectureClass::counterexample: return "COUNTEREXAMPLE";
  }
  return "?";
}

int ConjectureReport::count(ConjectureClass c) const {
  int total = 0;
  for (const ConjectureEntry& e : even) total += e.verdict == c ? 1 : 0;
  return total;
}

namespace {

// An odd Hamiltonian cycle c0..c(n-1) with the near-perfect matching
// c1c2, c3c4, ... is a blossom based at the exposed vertex c0, hence a
// flower with an empty stem through every vertex.
bool odd_cycle_flower_covers(const Graph& g, const VertexSequence& cycle) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i + 1 < cycle.size(); i += 2) {
    edges.emplace_back(cycle[i], cycle[i + 1]);
  }
  const Matching m = Matching::from_edges(g, edges);
  if (!is_maximum(g, m) || !is_blossom(g, m, cycle)) return false;
  const Flower f{make_blossom(g, m, cycle), {cycle[0]}};
  return is_flower(g, m, f) && vertices_of(f) == g.vertices();
}

}  // namespace

ConjectureReport conjecture_scan(int order_bound, int threads) {
  ConjectureReport report;
  report.order_bound = order_bound;
  ConnectedGraphCatalog catalog;
  for (int n = 2; n <= order_bound; ++n) {
    const std::vector<Graph>& graphs = catalog.of_order(n);
    std::vector<std::optional<VertexSequence>> cycles(graphs.size());
    detail::parallel_for(graphs.size(), threads, [&](std::size_t i) {
      cycles[i] = hamiltonian_cycle(graphs[i]);
    });

    if (n % 2 == 1) {
      std::vector<char> ok(graphs.size(), 1);
      detail::parallel_for(graphs.size(), threads, [&](std::size_t i) {
        if (cycles[i]) ok[i] = odd_cycle_flower_covers(graphs[i], *cycles[i]);
      });
      for (std::size_t i = 0; i < graphs.size(); ++i) {
        if (!cycles[i]) continue;
        ++report.odd_checked;
        if (!ok[i]) report.odd_failures.push_back(to_graph6(graphs[i]));
      }
      continue;
    }

    std::vector<std::size_t> hamiltonian;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      if (cycles[i]) hamiltonian.push_back(i);
    }
    std::vector<ConjectureEntry> entries(hamiltonian.size());
    detail::parallel_for(hamiltonian.size(), threads, [&](std::size_t k) {
      const Graph& g = graphs[hamiltonian[k]];
      ConjectureEntry& e = entries[k];
      e.graph6 = to_graph6(g);
      e.order = n;
      e.hamiltonian_cycle = *cycles[hamiltonian[k]];
      if (is_ke_direct(g).is_ke) {
        e.verdict = ConjectureClass::ke;
      } else if (is_sd_graph(g)) {
        e.verdict = ConjectureClass::sd;
      } else {
        e.verdict = ConjectureClass::counterexample;
        e.unmarked = g.vertices() - mark_vertices(g).v_t;
      }
    });
    report.even.insert(report.even.end(), entries.begin(), entries.end());
  }
  return report;
}

}  // namespace sdgraph
