#ifndef SDGRAPH_VERIFICATION_HPP_
#define SDGRAPH_VERIFICATION_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sdgraph/graph.hpp"

namespace sdgraph {

// Properties checked per graph by the sweeps below (bit flags).
enum Check : unsigned {
  kCheckMain = 1U << 0,       // V_T == V_ESG == V_J
  kCheckSterboul = 1U << 1,   // flower/posy test agrees with alpha + mu
  kCheckTposy = 1U << 2,      // flower/Tposy test agrees with alpha + mu
  kCheckJposy = 1U << 3,      // a Jposy under a maximum matching => not KE
  kCheckCorollary = 1U << 4,  // perfect matching graphs: KE <=> no Jposy
  kCheckAll = (1U << 5) - 1,
};

// "main", "sterboul", "tposy", "jposy", "corollary" or "all".
std::optional<unsigned> parse_check(std::string_view name);
std::vector<std::string> check_names(unsigned checks);

struct Counterexample {
  std::string graph6;
  std::string check;
  std::string detail;
};

struct VerificationReport {
  std::string name;
  unsigned checks = 0;
  int order_bound = 0;
  int graphs = 0;
  std::map<int, int> graphs_by_order;
  int ke_graphs = 0;
  int perfect_matching_graphs = 0;
  long matchings = 0;
  std::vector<Counterexample> counterexamples;

  bool passed() const { return counterexamples.empty(); }
  // Associative; appends counterexamples in argument order.
  void merge(const VerificationReport& other);
};

// Runs `checks` on one graph (order <= 16).
VerificationReport verify_graph(const Graph& g, unsigned checks);

// Runs `checks` on every graph; the result does not depend on `threads`.
VerificationReport verify_graphs(std::span<const Graph> graphs,
                                 unsigned checks, int threads = 1);

// Every connected graph of order 1..order_bound (internal generator).
VerificationReport verify_theorems(int order_bound,
                                   unsigned checks = kCheckAll,
                                   int threads = 1);

// Even subdivisions (each subdivision replaces an edge by a path of length
// three) of the two-triangle barbell and of K4, up to isomorphism, with at
// most `max_order` vertices.
std::vector<Graph> ear_suite_bases(int max_order = 12);

// For every base above and every odd ear of length <= max_ear_length over
// every attachment pair (u == v allowed), checks that every vertex of the
// extended graph lies in V_T.
VerificationReport verify_ear_tposy(int max_order = 12,
                                    int max_ear_length = 5, int threads = 1);

enum class ConjectureClass { ke, sd, counterexample };
std::string_view to_string(ConjectureClass c);

struct ConjectureEntry {
  std::string graph6;
  int order = 0;
  ConjectureClass verdict = ConjectureClass::ke;
  VertexSequence hamiltonian_cycle;
  VertexSet unmarked;  // vertices outside V_T (counterexamples only)
};

struct ConjectureReport {
  int order_bound = 0;
  std::vector<ConjectureEntry> even;  // every even-order Hamiltonian graph
  int odd_checked = 0;                // odd-order Hamiltonian graphs
  std::vector<std::string> odd_failures;

  int count(ConjectureClass c) const;
  bool odd_passed() const { return odd_failures.empty(); }
};

// Connected Hamiltonian graphs of order <= order_bound (<= 10).
ConjectureReport conjecture_scan(int order_bound, int threads = 1);

}  // namespace sdgraph

#endif  // SDGRAPH_VERIFICATION_HPP_
