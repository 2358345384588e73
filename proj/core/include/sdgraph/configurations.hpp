#ifndef SDGRAPH_CONFIGURATIONS_HPP_
#define SDGRAPH_CONFIGURATIONS_HPP_

#include <functional>
#include <map>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "sdgraph/alternating.hpp"
#include "sdgraph/blossom.hpp"
#include "sdgraph/graph.hpp"
#include "sdgraph/matching.hpp"

namespace sdgraph {

// Blossom plus an even alternating path (the stem) from the base to an
// exposed vertex, meeting the blossom only at the base. stem == {base} when
// the base itself is exposed.
struct Flower {
  Blossom blossom;
  VertexSequence stem;
  friend auto operator<=>(const Flower&, const Flower&) = default;
};

// Two blossoms whose bases are joined by a simple mm-alternating path
// (`link` runs from first.base to second.base).
struct Posy {
  Blossom first;
  Blossom second;
  VertexSequence link;
  friend auto operator<=>(const Posy&, const Posy&) = default;
};

// Posy whose link is internally disjoint from both blossoms.
struct Tposy : Posy {};

// Blossom plus an alternating walk from the base to an exposed vertex. The
// walk starts with the base's matched edge, or is just {base} when the base
// is exposed.
struct Jflower {
  Blossom blossom;
  VertexSequence walk;
};

// Two (possibly equal) blossoms whose bases are joined by an mm-alternating
// walk (odd length) from first.base to second.base.
struct Jposy {
  Blossom first;
  Blossom second;
  VertexSequence walk;
};

using Configuration =
    std::variant<Blossom, Flower, Posy, Tposy, Jflower, Jposy>;

std::string_view kind_name(const Configuration& c);
VertexSet vertices_of(const Configuration& c);

// Definition-level validators. They check every structural condition from
// scratch and never consult the search code below.
bool is_flower(const Graph& g, const Matching& m, const Flower& f);
bool is_posy(const Graph& g, const Matching& m, const Posy& p);
bool is_tposy(const Graph& g, const Matching& m, const Posy& p);
bool is_jflower(const Graph& g, const Matching& m, const Jflower& j);
bool is_jposy(const Graph& g, const Matching& m, const Jposy& j);

// Enumeration relative to a matching m (callers pass a maximum matching).

// All M-blossoms, ordered by base then by discovery. Throws CapacityError
// above `max_order`.
std::vector<Blossom> enumerate_blossoms(const Graph& g, const Matching& m,
                                        int max_order = 24);
// Streaming form; visit returns false to stop.
bool for_each_blossom(const Graph& g, const Matching& m,
                      const std::function<bool(const Blossom&)>& visit);

std::vector<Flower> find_flowers(const Graph& g, const Matching& m);
std::vector<Posy> find_posies(const Graph& g, const Matching& m);
std::vector<Tposy> find_tposies(const Graph& g, const Matching& m);

// Vertex sets covered by each configuration kind for one matching, computed
// from blossom vertex sets grouped by base:
//  - flowers and (T)posies by exhaustive simple-path search,
//  - Jflowers and Jposies by forward/backward reachability in the parity
//    state digraph.
// Results are cached on first use.
class ConfigurationProfile {
 public:
  ConfigurationProfile(const Graph& g, const Matching& m);

  // Distinct blossom vertex sets, indexed by base.
  const std::vector<std::vector<VertexSet>>& blossom_sets() const {
    return blossom_sets_;
  }
  VertexSet bases() const { return bases_; }

  VertexSet flower_vertices() const;
  VertexSet posy_vertices() const;
  VertexSet tposy_vertices() const;
  VertexSet jflower_vertices() const;
  VertexSet jposy_vertices() const;

 private:
  void compute_posies() const;

  const Graph& g_;
  const Matching& m_;
  std::vector<std::vector<VertexSet>> blossom_sets_;
  std::vector<VertexSet> blossom_union_;
  VertexSet bases_;
  mutable std::optional<VertexSet> flower_;
  mutable std::optional<VertexSet> posy_;
  mutable std::optional<VertexSet> tposy_;
  mutable std::optional<VertexSet> jflower_;
  mutable std::optional<VertexSet> jposy_;
};

VertexSet flower_vertices(const Graph& g, const Matching& m);
VertexSet posy_vertices(const Graph& g, const Matching& m);
VertexSet tposy_vertices(const Graph& g, const Matching& m);
VertexSet jflower_vertices(const Graph& g, const Matching& m);
VertexSet jposy_vertices(const Graph& g, const Matching& m);
bool exists_jposy(const Graph& g, const Matching& m);

// Existence tests that stop at the first configuration found.
bool exists_flower(const Graph& g, const Matching& m);
bool exists_posy(const Graph& g, const Matching& m);
bool exists_tposy(const Graph& g, const Matching& m);

// A maximum matching together with a flower or Tposy relative to it.
struct Witness {
  Matching matching;
  Configuration configuration;
};

struct MarkOptions {
  int max_order = kDefaultMatchingEnumerationBound;
  // Record a flower/Tposy witness for every marked vertex.
  bool witnesses = false;
  // Stop scanning matchings once all three sets are the whole vertex set.
  bool stop_when_full = false;
  int threads = 1;
};

// V_T (flower or Tposy), V_ESG (flower or posy) and V_J (Jflower or Jposy),
// each the union over all maximum matchings.
struct MarkReport {
  int order = 0;
  VertexSet v_t;
  VertexSet v_esg;
  VertexSet v_j;
  int matchings = 0;
  std::map<VertexId, Witness> witnesses;

  bool sets_agree() const { return v_t == v_esg && v_esg == v_j; }
  bool chain_holds() const {
    return v_t.subset_of(v_esg) && v_esg.subset_of(v_j);
  }
};

MarkReport mark_vertices(const Graph& g, const MarkOptions& options = {});

// Every vertex is an SD-vertex.
bool is_sd_graph(const Graph& g,
                 int max_order = kDefaultMatchingEnumerationBound);

// Searches maximum matchings in enumeration order for a flower (first) or a
// Tposy containing v. Absent iff v is not in V_J(g); throws InvariantError if
// v is in V_J(g) yet no such witness exists.
std::optional<Witness> witness_for_vertex(
    const Graph& g, VertexId v,
    int max_order = kDefaultMatchingEnumerationBound);

// The graph with a pendant triangle hung from u: fresh vertices x, y, z and
// edges ux, xy, xz, yz.
struct Gadget {
  Graph graph;
  VertexId x = 0;
  VertexId y = 0;
  VertexId z = 0;
};

// Throws DomainError unless m is a maximum matching of g leaving u exposed.
Gadget flower_gadget(const Graph& g, const Matching& m, VertexId u);

}  // namespace sdgraph

#endif  // SDGRAPH_CONFIGURATIONS_HPP_
