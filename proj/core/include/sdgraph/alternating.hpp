#ifndef SDGRAPH_ALTERNATING_HPP_
#define SDGRAPH_ALTERNATING_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "sdgraph/blossom.hpp"
#include "sdgraph/graph.hpp"
#include "sdgraph/matching.hpp"

namespace sdgraph {

enum class Parity : std::uint8_t { unmatched = 0, matched = 1 };

constexpr Parity flip(Parity p) {
  return p == Parity::matched ? Parity::unmatched : Parity::matched;
}

// Endpoint classification of an alternating walk by the membership of its
// first and last edges in M.
enum class WalkClass : std::uint8_t { trivial, mm, nn, mn, nm };

std::string_view to_string(WalkClass c);

constexpr WalkClass make_class(Parity first, Parity last) {
  if (first == Parity::matched) {
    return last == Parity::matched ? WalkClass::mm : WalkClass::mn;
  }
  return last == Parity::matched ? WalkClass::nm : WalkClass::nn;
}
// Parity of the first / last edge of a nontrivial class.
Parity first_parity(WalkClass c);
Parity last_parity(WalkClass c);
// Class of the reversed walk (mn <-> nm).
WalkClass reversed(WalkClass c);

// Walk whose consecutive edges alternate in and out of a matching.
class AlternatingWalk {
 public:
  // Throws ValidationError when the sequence is not a walk of g or does not
  // alternate with respect to m.
  static AlternatingWalk make(const Graph& g, const Matching& m,
                              VertexSequence vertices);

  const VertexSequence& vertices() const { return vertices_; }
  // matched_flags()[i] tells whether edge vertices[i] vertices[i+1] is in M.
  const std::vector<bool>& matched_flags() const { return matched_; }
  int length() const { return static_cast<int>(matched_.size()); }
  VertexId front() const { return vertices_.front(); }
  VertexId back() const { return vertices_.back(); }
  bool is_closed() const { return length() > 0 && front() == back(); }
  bool is_path() const;
  WalkClass walk_class() const;

 private:
  VertexSequence vertices_;
  std::vector<bool> matched_;
};

bool is_alternating_walk(const Graph& g, const Matching& m,
                         std::span<const VertexId> walk);

// Throws ValidationError for a sequence that is not an alternating walk.
WalkClass classify_walk(const Graph& g, const Matching& m,
                        std::span<const VertexId> walk);

// Node (v, p) of the parity state digraph: "at v, the next edge must have
// parity p". Arc (v,p) -> (u, not p) iff vu in E and (vu in M <=> p matched).
// Alternating walks are exactly the directed walks of this digraph.
struct State {
  VertexId vertex;
  Parity next;
  friend bool operator==(const State&, const State&) = default;
};

struct StateSet {
  VertexSet next_matched;
  VertexSet next_unmatched;

  VertexSet& part(Parity p) {
    return p == Parity::matched ? next_matched : next_unmatched;
  }
  VertexSet part(Parity p) const {
    return p == Parity::matched ? next_matched : next_unmatched;
  }
  bool contains(State s) const { return part(s.next).contains(s.vertex); }
  void insert(State s) { part(s.next).insert(s.vertex); }
  // Vertices of all states.
  VertexSet vertices() const { return next_matched | next_unmatched; }
  bool empty() const { return next_matched.empty() && next_unmatched.empty(); }

  friend StateSet operator&(StateSet a, StateSet b) {
    return {a.next_matched & b.next_matched,
            a.next_unmatched & b.next_unmatched};
  }
  friend StateSet operator|(StateSet a, StateSet b) {
    return {a.next_matched | b.next_matched,
            a.next_unmatched | b.next_unmatched};
  }
  friend bool operator==(const StateSet&, const StateSet&) = default;
};

class StateDigraph {
 public:
  StateDigraph(const Graph& g, const Matching& m);

  int node_count() const { return 2 * order_; }
  int arc_count() const;
  std::vector<State> successors(State s) const;
  std::vector<State> predecessors(State s) const;

  // States reachable from `seeds` by zero or more arcs.
  StateSet forward(StateSet seeds) const;
  // States from which some state of `targets` is reachable.
  StateSet backward(StateSet targets) const;
  // One step forward / backward.
  StateSet step(StateSet from) const;
  StateSet step_back(StateSet to) const;

 private:
  int order_;
  std::vector<VertexSet> unmatched_nbrs_;  // N(v) minus M(v)
  std::vector<VertexId> mate_;
};

// Is there a nontrivial (possibly self-intersecting) alternating walk from
// `from` to `to` of class `cls`? cls must not be trivial.
bool walk_exists(const Graph& g, const Matching& m, VertexId from,
                 VertexId to, WalkClass cls);

// Visits every simple alternating path that starts at `from` with an edge of
// parity `first`, avoids `forbidden`, and has at least one edge. The visitor
// receives the path and the parity of its last edge and returns false to
// stop the whole search. Returns false iff stopped.
bool for_each_alternating_path(
    const Graph& g, const Matching& m, VertexId from, Parity first,
    VertexSet forbidden,
    const std::function<bool(const VertexSequence&, Parity)>& visit);

// Some simple alternating path of the requested class from `from` to `to`
// (exhaustive search). Absent when from == to.
std::optional<VertexSequence> find_alternating_path(const Graph& g,
                                                    const Matching& m,
                                                    VertexId from, VertexId to,
                                                    WalkClass cls);

// Result of removing even cycles from a walk, leftmost closing cycle first.
// Either `blossom` is empty and `prefix` is a simple alternating path with
// the walk's endpoints and endpoint parities, or the first self-intersection
// closed an odd cycle: `prefix` runs from the walk's start to the blossom
// base and `blossom` is that cycle.
struct SimplifiedWalk {
  VertexSequence prefix;
  std::optional<Blossom> blossom;
};

// Throws DomainError for a closed walk (use
// extract_blossom_from_closed_walk) and ValidationError for a non-alternating
// one.
SimplifiedWalk simplify_walk(const Graph& g, const Matching& m,
                             std::span<const VertexId> walk);

// A closed alternating walk of odd length (first and last edges of the same
// parity) always contains an M-blossom; returns one whose edges lie on the
// walk. Throws DomainError when the walk is not closed or has even length,
// InvariantError if no blossom is found.
Blossom extract_blossom_from_closed_walk(const Graph& g, const Matching& m,
                                         std::span<const VertexId> walk);

}  // namespace sdgraph

#endif  // SDGRAPH_ALTERNATING_HPP_
