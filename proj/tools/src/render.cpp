#include "render.hpp"

#include <sstream>

namespace sdgraph::cli {

std::string set_text(VertexSet s) {
  std::string out = "{";
  for (VertexId v : s) {
    if (out.size() > 1) out += ' ';
    out += std::to_string(v);
  }
  return out + "}";
}

std::string sequence_text(const VertexSequence& s) {
  std::string out;
  for (VertexId v : s) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out;
}

std::string matching_text(const Matching& m) {
  std::string out;
  for (Edge e : m.edges()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(e.u) + "-" + std::to_string(e.v);
  }
  return out.empty() ? "(empty)" : out;
}

namespace {

std::string blossom_text(const Blossom& b) {
  return "blossom " + sequence_text(b.cycle) + " (base " +
         std::to_string(b.base) + ")";
}

}  // namespace

std::string describe(const Configuration& c) {
  std::ostringstream out;
  out << kind_name(c) << ": ";
  if (const auto* b = std::get_if<Blossom>(&c)) {
    out << blossom_text(*b);
  } else if (const auto* f = std::get_if<Flower>(&c)) {
    out << blossom_text(f->blossom) << ", stem " << sequence_text(f->stem);
  } else if (const auto* p = std::get_if<Posy>(&c)) {
    out << blossom_text(p->first) << " + " << blossom_text(p->second)
        << ", link " << sequence_text(p->link);
  } else if (const auto* t = std::get_if<Tposy>(&c)) {
    out << blossom_text(t->first) << " + " << blossom_text(t->second)
        << ", link " << sequence_text(t->link);
  } else if (const auto* j = std::get_if<Jflower>(&c)) {
    out << blossom_text(j->blossom) << ", walk " << sequence_text(j->walk);
  } else if (const auto* jp = std::get_if<Jposy>(&c)) {
    out << blossom_text(jp->first) << " + " << blossom_text(jp->second)
        << ", walk " << sequence_text(jp->walk);
  }
  return out.str();
}

void print_verification(std::ostream& out, const VerificationReport& r) {
  out << "sweep: " << r.name << "  checks:";
  for (const std::string& c : check_names(r.checks)) out << ' ' << c;
  if (r.checks == 0) out << " eartposy";
  out << "\n";
  out << "order  graphs\n";
  for (const auto& [n, count] : r.graphs_by_order) {
    out << (n < 10 ? "    " : "   ") << n << "  " << count << "\n";
  }
  out << "total graphs: " << r.graphs << "\n"
      << "KE graphs: " << r.ke_graphs << "\n"
      << "perfect matching graphs: " << r.perfect_matching_graphs << "\n"
      << "maximum matchings examined: " << r.matchings << "\n"
      << "counterexamples: " << r.counterexamples.size() << "\n";
  for (const Counterexample& c : r.counterexamples) {
    out << "  COUNTEREXAMPLE " << c.check << " " << c.graph6 << " "
        << c.detail << "\n";
  }
}

void print_conjecture(std::ostream& out, const ConjectureReport& r,
                      bool list_all) {
  out << "Hamiltonian graphs up to order " << r.order_bound << "\n";
  out << "even order: " << r.even.size() << " graphs, KE "
      << r.count(ConjectureClass::ke) << ", SD "
      << r.count(ConjectureClass::sd) << ", COUNTEREXAMPLE "
      << r.count(ConjectureClass::counterexample) << "\n";
  for (const ConjectureEntry& e : r.even) {
    if (!list_all && e.verdict != ConjectureClass::counterexample) continue;
    out << "  " << e.graph6 << "  order " << e.order << "  "
        << to_string(e.verdict) << "  cycle " << sequence_text(e.hamiltonian_cycle);
    if (e.verdict == ConjectureClass::counterexample) {
      out << "  unmarked " << set_text(e.unmarked) << "  <<< COUNTEREXAMPLE";
    }
    out << "\n";
  }
  out << "odd order: " << r.odd_checked << " graphs, "
      << r.odd_failures.size() << " not SD\n";
  for (const std::string& g : r.odd_failures) {
    out << "  NOT SD " << g << "\n";
  }
}

}  // namespace sdgraph::cli
