#include "sdgraph/alternating.hpp"

#include <string>

#include "sdgraph/errors.hpp"

namespace sdgraph {

std::string_view to_string(WalkClass c) {
  switch (c) {
    case WalkClass::trivial: return "trivial";
    case WalkClass::mm: return "mm";
    case WalkClass::nn: return "nn";
    case WalkClass::mn: return "mn";
    case WalkClass::nm: return "nm";
  }
  return "?";
}

Parity first_parity(WalkClass c) {
  switch (c) {
    case WalkClass::mm:
    case WalkClass::mn: return Parity::matched;
    case WalkClass::nn:
    case WalkClass::nm: return Parity::unmatched;
    case WalkClass::trivial: break;
  }
  throw DomainError("trivial walks have no first edge");
}

Parity last_parity(WalkClass c) {
  switch (c) {
    case WalkClass::mm:
    case WalkClass::nm: return Parity::matched;
    case WalkClass::nn:
    case WalkClass::mn: return Parity::unmatched;
    case WalkClass::trivial: break;
  }
  throw DomainError("trivial walks have no last edge");
}

WalkClass reversed(WalkClass c) {
  switch (c) {
    case WalkClass::mn: return WalkClass::nm;
    case WalkClass::nm: return WalkClass::mn;
    default: return c;
  }
}

bool is_alternating_walk(const Graph& g, const Matching& m,
                         std::span<const VertexId> walk) {
  if (!is_walk(g, walk) || m.order() != g.order()) return false;
  for (std::size_t i = 0; i + 2 < walk.size(); ++i) {
    if (m.contains(walk[i], walk[i + 1]) ==
        m.contains(walk[i + 1], walk[i + 2])) {
      return false;
    }
  }
  return true;
}

AlternatingWalk AlternatingWalk::make(const Graph& g, const Matching& m,
                                      VertexSequence vertices) {
  if (!is_walk(g, vertices)) {
    throw ValidationError("sequence is not a walk of the graph");
  }
  if (!is_alternating_walk(g, m, vertices)) {
    throw ValidationError("walk does not alternate with respect to M");
  }
  AlternatingWalk w;
  w.matched_.reserve(vertices.size() - 1);
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
    w.matched_.push_back(m.contains(vertices[i], vertices[i + 1]));
  }
  w.vertices_ = std::move(vertices);
  return w;
}

bool AlternatingWalk::is_path() const {
  VertexSet seen;
  for (VertexId v : vertices_) {
    if (seen.contains(v)) return false;
    seen.insert(v);
  }
  return true;
}

WalkClass AlternatingWalk::walk_class() const {
  if (matched_.empty()) return WalkClass::trivial;
  auto parity = [](bool b) { return b ? Parity::matched : Parity::unmatched; };
  return make_class(parity(matched_.front()), parity(matched_.back()));
}

WalkClass classify_walk(const Graph& g, const Matching& m,
                        std::span<const VertexId> walk) {
  return AlternatingWalk::make(g, m, VertexSequence(walk.begin(), walk.end()))
      .walk_class();
}

StateDigraph::StateDigraph(const Graph& g, const Matching& m)
    : order_(g.order()), unmatched_nbrs_(g.order()), mate_(g.order()) {
  for (VertexId v = 0; v < order_; ++v) {
    mate_[v] = m.mate(v);
    unmatched_nbrs_[v] = g.neighbors(v);
    if (m.is_matched(v)) unmatched_nbrs_[v].erase(m.mate(v));
  }
}

int StateDigraph::arc_count() const {
  int arcs = 0;
  for (VertexId v = 0; v < order_; ++v) {
    if (mate_[v] != v) ++arcs;
    arcs += unmatched_nbrs_[v].size();
  }
  return arcs;
}

std::vector<State> StateDigraph::successors(State s) const {
  std::vector<State> out;
  if (s.next == Parity::matched) {
    if (mate_[s.vertex] != s.vertex) {
      out.push_back({mate_[s.vertex], Parity::unmatched});
    }
  } else {
    for (VertexId u : unmatched_nbrs_[s.vertex]) {
      out.push_back({u, Parity::matched});
    }
  }
  return out;
}

std::vector<State> StateDigraph::predecessors(State s) const {
  std::vector<State> out;
  if (s.next == Parity::unmatched) {
    if (mate_[s.vertex] != s.vertex) {
      out.push_back({mate_[s.vertex], Parity::matched});
    }
  } else {
    for (VertexId u : unmatched_nbrs_[s.vertex]) {
      out.push_back({u, Parity::unmatched});
    }
  }
  return out;
}

StateSet StateDigraph::step(StateSet from) const {
  StateSet out;
  for (VertexId v : from.next_matched) {
    if (mate_[v] != v) out.next_unmatched.insert(mate_[v]);
  }
  for (VertexId v : from.next_unmatched) out.next_matched |= unmatched_nbrs_[v];
  return out;
}

// The unmatched-neighbour relation is symmetric, so stepping back over an
// unmatched edge is the same bit operation as stepping forward.
StateSet StateDigraph::step_back(StateSet to) const {
  StateSet out;
  for (VertexId v : to.next_unmatched) {
    if (mate_[v] != v) out.next_matched.insert(mate_[v]);
  }
  for (VertexId v : to.next_matched) out.next_unmatched |= unmatched_nbrs_[v];
  return out;
}

StateSet StateDigraph::forward(StateSet seeds) const {
  StateSet reached = seeds;
  StateSet frontier = seeds;
  while (!frontier.empty()) {
    StateSet next = step(frontier);
    frontier = {next.next_matched - reached.next_matched,
                next.next_unmatched - reached.next_unmatched};
    reached = reached | next;
  }
  return reached;
}

StateSet StateDigraph::backward(StateSet targets) const {
  StateSet reached = targets;
  StateSet frontier = targets;
  while (!frontier.empty()) {
    StateSet next = step_back(frontier);
    frontier = {next.next_matched - reached.next_matched,
                next.next_unmatched - reached.next_unmatched};
    reached = reached | next;
  }
  return reached;
}

bool walk_exists(const Graph& g, const Matching& m, VertexId from,
                 VertexId to, WalkClass cls) {
  if (cls == WalkClass::trivial) {
    throw DomainError("walk_exists needs a nontrivial walk class");
  }
  StateDigraph d(g, m);
  StateSet start;
  start.insert({from, first_parity(cls)});
  return d.forward(d.step(start)).contains({to, flip(last_parity(cls))});
}

namespace {

class PathSearch {
 public:
  PathSearch(const Graph& g, const Matching& m,
             const std::function<bool(const VertexSequence&, Parity)>& visit)
      : g_(g), m_(m), visit_(visit) {}

  bool run(VertexId from, Parity first, VertexSet forbidden) {
    path_.assign(1, from);
    on_path_ = VertexSet::single(from);
    forbidden_ = forbidden;
    return extend(first);
  }

 private:
  bool extend(Parity want) {
    const VertexId v = path_.back();
    VertexSet next;
    if (want == Parity::matched) {
      if (m_.is_matched(v)) next.insert(m_.mate(v));
    } else {
      next = g_.neighbors(v);
      if (m_.is_matched(v)) next.erase(m_.mate(v));
    }
    next -= on_path_ | forbidden_;
    for (VertexId u : next) {
      path_.push_back(u);
      on_path_.insert(u);
      bool go_on = visit_(path_, want) && extend(flip(want));
      on_path_.erase(u);
      path_.pop_back();
      if (!go_on) return false;
    }
    return true;
  }

  const Graph& g_;
  const Matching& m_;
  const std::function<bool(const VertexSequence&, Parity)>& visit_;
  VertexSequence path_;
  VertexSet on_path_;
  VertexSet forbidden_;
};

}  // namespace

bool for_each_alternating_path(
    const Graph& g, const Matching& m, VertexId from, Parity first,
    VertexSet forbidden,
    const std::function<bool(const VertexSequence&, Parity)>& visit) {
  return PathSearch(g, m, visit).run(from, first, forbidden);
}

std::optional<VertexSequence> find_alternating_path(const Graph& g,
                                                    const Matching& m,
                                                    VertexId from, VertexId to,
                                                    WalkClass cls) {
  if (cls == WalkClass::trivial) {
    throw DomainError("find_alternating_path needs a nontrivial walk class");
  }
  if (from == to) return std::nullopt;
  const Parity last = last_parity(cls);
  std::optional<VertexSequence> found;
  for_each_alternating_path(
      g, m, from, first_parity(cls), VertexSet{},
      [&](const VertexSequence& path, Parity p) {
        if (path.back() == to && p == last) {
          found = path;
          return false;
        }
        return true;
      });
  return found;
}

namespace {

// Repeatedly deletes the leftmost closing even cycle of `walk`. Returns the
// index range [i, j] of the first odd closing cycle (walk[i] == walk[j]) in
// the reduced walk, or nullopt once the walk is a simple path.
std::optional<std::pair<std::size_t, std::size_t>> reduce_even_cycles(
    VertexSequence& walk) {
  for (;;) {
    std::vector<int> first_seen(Graph::kMaxOrder, -1);
    bool removed = false;
    for (std::size_t j = 0; j < walk.size(); ++j) {
      const int i = first_seen[walk[j]];
      if (i < 0) {
        first_seen[walk[j]] = static_cast<int>(j);
        continue;
      }
      if ((j - i) % 2 == 1) return std::pair{static_cast<std::size_t>(i), j};
      walk.erase(walk.begin() + i + 1, walk.begin() + j + 1);
      removed = true;
      break;
    }
    if (!removed) return std::nullopt;
  }
}

}  // namespace

SimplifiedWalk simplify_walk(const Graph& g, const Matching& m,
                             std::span<const VertexId> walk) {
  const AlternatingWalk checked =
      AlternatingWalk::make(g, m, VertexSequence(walk.begin(), walk.end()));
  if (checked.is_closed()) {
    throw DomainError("simplify_walk expects an open walk");
  }
  VertexSequence w = checked.vertices();
  SimplifiedWalk out;
  if (auto odd = reduce_even_cycles(w)) {
    auto [i, j] = *odd;
    out.prefix.assign(w.begin(), w.begin() + i + 1);
    out.blossom =
        make_blossom(g, m, std::span<const VertexId>(w.data() + i, j - i));
  } else {
    out.prefix = std::move(w);
  }
  return out;
}

Blossom extract_blossom_from_closed_walk(const Graph& g, const Matching& m,
                                         std::span<const VertexId> walk) {
  const AlternatingWalk checked =
      AlternatingWalk::make(g, m, VertexSequence(walk.begin(), walk.end()));
  if (!checked.is_closed()) throw DomainError("walk is not closed");
  if (checked.length() % 2 == 0) {
    throw DomainError(
        "closed walk has even length; an even alternating cycle need not "
        "contain a blossom");
  }
  VertexSequence w = checked.vertices();
  auto odd = reduce_even_cycles(w);
  if (!odd) {
    throw InvariantError("closed odd alternating walk without an odd cycle");
  }
  auto [i, j] = *odd;
  std::span<const VertexId> cycle(w.data() + i, j - i);
  if (!is_blossom(g, m, cycle)) {
    throw InvariantError("odd cycle of an alternating walk is not a blossom");
  }
  return make_blossom(g, m, cycle);
}

}  // namespace sdgraph
