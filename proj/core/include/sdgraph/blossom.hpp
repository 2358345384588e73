#ifndef SDGRAPH_BLOSSOM_HPP_
#define SDGRAPH_BLOSSOM_HPP_

#include <span>

#include "sdgraph/graph.hpp"
#include "sdgraph/matching.hpp"

namespace sdgraph {

// M-blossom: an odd cycle of length 2k+1 with exactly k matched edges. The
// base is the one cycle vertex not matched along the cycle.
//
// Canonical form: cycle[0] is the base and cycle[1] < cycle.back(), so two
// blossoms are equal iff they are the same cycle.
struct Blossom {
  VertexSequence cycle;
  VertexId base = 0;

  VertexSet vertices() const { return VertexSet::of(cycle); }
  int length() const { return static_cast<int>(cycle.size()); }

  friend auto operator<=>(const Blossom&, const Blossom&) = default;
};

// Definition-level check on a cycle given as c0..ck-1 (the closing edge
// ck-1 c0 is implied; a repeated c0 at the end is tolerated).
bool is_blossom(const Graph& g, const Matching& m,
                std::span<const VertexId> cycle);

// Canonicalises a cycle into a Blossom. Throws DomainError when the cycle is
// not an M-blossom of g.
Blossom make_blossom(const Graph& g, const Matching& m,
                     std::span<const VertexId> cycle);

}  // namespace sdgraph

#endif  // SDGRAPH_BLOSSOM_HPP_
