#include "sdgraph/configurations.hpp"

#include <algorithm>
#include <span>

#include "detail.hpp"
#include "sdgraph/errors.hpp"

namespace sdgraph {
namespace {

bool valid_blossom(const Graph& g, const Matching& m, const Blossom& b) {
  return is_blossom(g, m, b.cycle) && make_blossom(g, m, b.cycle).base == b.base;
}

// Internal vertices of a path (all but the endpoints).
VertexSet interior(const VertexSequence& path) {
  if (path.size() <= 2) return {};
  return VertexSet::of(std::span<const VertexId>(path.data() + 1,
                                                 path.size() - 2));
}

bool starts_matched(const Matching& m, const VertexSequence& w) {
  return w.size() >= 2 && m.contains(w[0], w[1]);
}

bool ends_matched(const Matching& m, const VertexSequence& w) {
  return w.size() >= 2 && m.contains(w[w.size() - 2], w.back());
}

}  // namespace

std::string_view kind_name(const Configuration& c) {
  struct Visitor {
    std::string_view operator()(const Blossom&) const { return "blossom"; }
    std::string_view operator()(const Flower&) const { return "flower"; }
    std::string_view operator()(const Tposy&) const { return "tposy"; }
    std::string_view operator()(const Posy&) const { return "posy"; }
    std::string_view operator()(const Jflower&) const { return "jflower"; }
    std::string_view operator()(const Jposy&) const { return "jposy"; }
  };
  return std::visit(Visitor{}, c);
}

VertexSet vertices_of(const Configuration& c) {
  struct Visitor {
    VertexSet operator()(const Blossom& b) const { return b.vertices(); }
    VertexSet operator()(const Flower& f) const {
      return f.blossom.vertices() | VertexSet::of(f.stem);
    }
    VertexSet operator()(const Posy& p) const {
      return p.first.vertices() | p.second.vertices() | VertexSet::of(p.link);
    }
    VertexSet operator()(const Jflower& j) const {
      return j.blossom.vertices() | VertexSet::of(j.walk);
    }
    VertexSet operator()(const Jposy& j) const {
      return j.first.vertices() | j.second.vertices() | VertexSet::of(j.walk);
    }
  };
  return std::visit(Visitor{}, c);
}

bool is_flower(const Graph& g, const Matching& m, const Flower& f) {
  if (!valid_blossom(g, m, f.blossom)) return false;
  const VertexSequence& stem = f.stem;
  if (stem.empty() || stem.front() != f.blossom.base) return false;
  if (stem.size() == 1) return !m.is_matched(f.blossom.base);
  if (!is_simple_path(g, stem) || !is_alternating_walk(g, m, stem)) {
    return false;
  }
  if ((stem.size() - 1) % 2 != 0 || m.is_matched(stem.back())) return false;
  return (VertexSet::of(stem) & f.blossom.vertices()) ==
         VertexSet::single(f.blossom.base);
}

bool is_posy(const Graph& g, const Matching& m, const Posy& p) {
  if (!valid_blossom(g, m, p.first) || !valid_blossom(g, m, p.second)) {
    return false;
  }
  if (p.first.vertices() == p.second.vertices() &&
      p.first.base == p.second.base) {
    return false;
  }
  const VertexSequence& link = p.link;
  if (link.size() < 2 || link.front() != p.first.base ||
      link.back() != p.second.base) {
    return false;
  }
  if (!is_simple_path(g, link) || !is_alternating_walk(g, m, link)) {
    return false;
  }
  return (link.size() - 1) % 2 == 1 && starts_matched(m, link) &&
         ends_matched(m, link);
}

bool is_tposy(const Graph& g, const Matching& m, const Posy& p) {
  return is_posy(g, m, p) &&
         !interior(p.link).intersects(p.first.vertices() |
                                      p.second.vertices());
}

bool is_jflower(const Graph& g, const Matching& m, const Jflower& j) {
  if (!valid_blossom(g, m, j.blossom)) return false;
  const VertexSequence& w = j.walk;
  if (w.empty() || w.front() != j.blossom.base) return false;
  if (w.size() == 1) return !m.is_matched(j.blossom.base);
  return is_alternating_walk(g, m, w) && starts_matched(m, w) &&
         !m.is_matched(w.back());
}

bool is_jposy(const Graph& g, const Matching& m, const Jposy& j) {
  if (!valid_blossom(g, m, j.first) || !valid_blossom(g, m, j.second)) {
    return false;
  }
  const VertexSequence& w = j.walk;
  if (w.size() < 2 || w.front() != j.first.base ||
      w.back() != j.second.base) {
    return false;
  }
  return is_alternating_walk(g, m, w) && (w.size() - 1) % 2 == 1 &&
         starts_matched(m, w) && ends_matched(m, w);
}

std::vector<Flower> find_flowers(const Graph& g, const Matching& m) {
  std::vector<Flower> out;
  for_each_blossom(g, m, [&](const Blossom& b) {
    if (!m.is_matched(b.base)) {
      out.push_back({b, {b.base}});
      return true;
    }
    const VertexSet avoid = b.vertices() - VertexSet::single(b.base);
    for_each_alternating_path(
        g, m, b.base, Parity::matched, avoid,
        [&](const VertexSequence& path, Parity last) {
          if (last == Parity::unmatched && !m.is_matched(path.back())) {
            out.push_back({b, path});
          }
          return true;
        });
    return true;
  });
  return out;
}

namespace {

// Posies with first.base < second.base; `tight` keeps only Tposies.
template <typename Out>
std::vector<Out> collect_posies(const Graph& g, const Matching& m,
                                bool tight) {
  std::vector<std::vector<Blossom>> by_base(g.order());
  for_each_blossom(g, m, [&](const Blossom& b) {
    by_base[b.base].push_back(b);
    return true;
  });
  std::vector<Out> out;
  for (VertexId b1 = 0; b1 < g.order(); ++b1) {
    if (by_base[b1].empty() || !m.is_matched(b1)) continue;
    for_each_alternating_path(
        g, m, b1, Parity::matched, VertexSet{},
        [&](const VertexSequence& path, Parity last) {
          const VertexId b2 = path.back();
          if (last != Parity::matched || b2 < b1 || by_base[b2].empty()) {
            return true;
          }
          const VertexSet inner = interior(path);
          for (const Blossom& first : by_base[b1]) {
            if (tight && inner.intersects(first.vertices())) continue;
            for (const Blossom& second : by_base[b2]) {
              if (tight && inner.intersects(second.vertices())) continue;
              Out p;
              p.first = first;
              p.second = second;
              p.link = path;
              out.push_back(std::move(p));
            }
          }
          return true;
        });
  }
  return out;
}

}  // namespace

std::vector<Posy> find_posies(const Graph& g, const Matching& m) {
  return collect_posies<Posy>(g, m, false);
}

std::vector<Tposy> find_tposies(const Graph& g, const Matching& m) {
  return collect_posies<Tposy>(g, m, true);
}

ConfigurationProfile::ConfigurationProfile(const Graph& g, const Matching& m)
    : g_(g), m_(m), blossom_sets_(detail::blossom_sets_by_base(g, m)),
      blossom_union_(g.order()) {
  for (VertexId b = 0; b < g.order(); ++b) {
    for (VertexSet s : blossom_sets_[b]) blossom_union_[b] |= s;
    if (!blossom_sets_[b].empty()) bases_.insert(b);
  }
}

VertexSet ConfigurationProfile::flower_vertices() const {
  if (flower_) return *flower_;
  VertexSet marked;
  for (VertexId b : bases_) {
    if (!m_.is_matched(b)) {
      marked |= blossom_union_[b];
      continue;
    }
    for_each_alternating_path(
        g_, m_, b, Parity::matched, VertexSet{},
        [&](const VertexSequence& path, Parity last) {
          if (last != Parity::unmatched || m_.is_matched(path.back())) {
            return true;
          }
          const VertexSet stem = VertexSet::of(path);
          for (VertexSet blossom : blossom_sets_[b]) {
            if ((blossom & stem) == VertexSet::single(b)) {
              marked |= blossom | stem;
            }
          }
          return true;
        });
  }
  flower_ = marked;
  return marked;
}

void ConfigurationProfile::compute_posies() const {
  VertexSet loose;
  VertexSet tight;
  for (VertexId b1 : bases_) {
    if (!m_.is_matched(b1)) continue;
    for_each_alternating_path(
        g_, m_, b1, Parity::matched, VertexSet{},
        [&](const VertexSequence& path, Parity last) {
          const VertexId b2 = path.back();
          if (last != Parity::matched || b2 < b1 || !bases_.contains(b2)) {
            return true;
          }
          const VertexSet link = VertexSet::of(path);
          loose |= link | blossom_union_[b1] | blossom_union_[b2];
          const VertexSet inner = interior(path);
          VertexSet first;
          VertexSet second;
          for (VertexSet s : blossom_sets_[b1]) {
            if (!s.intersects(inner)) first |= s;
          }
          for (VertexSet s : blossom_sets_[b2]) {
            if (!s.intersects(inner)) second |= s;
          }
          if (!first.empty() && !second.empty()) {
            tight |= link | first | second;
          }
          return true;
        });
  }
  posy_ = loose;
  tposy_ = tight;
}

VertexSet ConfigurationProfile::posy_vertices() const {
  if (!posy_) compute_posies();
  return *posy_;
}

VertexSet ConfigurationProfile::tposy_vertices() const {
  if (!tposy_) compute_posies();
  return *tposy_;
}

VertexSet ConfigurationProfile::jflower_vertices() const {
  if (jflower_) return *jflower_;
  const StateDigraph d(g_, m_);
  const VertexSet exposed = m_.exposed();
  StateSet starts;
  starts.next_matched = bases_ & m_.saturated();
  StateSet accepts;
  accepts.next_matched = exposed;
  const StateSet reach = d.forward(starts);
  const StateSet coreach = d.backward(accepts);
  VertexSet marked = (reach & coreach).vertices();
  for (VertexId b : bases_) {
    if (exposed.contains(b) || coreach.next_matched.contains(b)) {
      marked |= blossom_union_[b];
    }
  }
  jflower_ = marked;
  return marked;
}

VertexSet ConfigurationProfile::jposy_vertices() const {
  if (jposy_) return *jposy_;
  const StateDigraph d(g_, m_);
  const VertexSet matched_bases = bases_ & m_.saturated();
  // Start: at a base, next edge matched. Accept: arrived at a base over a
  // matched edge, so the next edge would be unmatched.
  StateSet starts;
  starts.next_matched = matched_bases;
  StateSet accepts;
  accepts.next_unmatched = matched_bases;
  const StateSet reach = d.forward(starts);
  const StateSet coreach = d.backward(accepts);
  VertexSet marked = (reach & coreach).vertices();
  for (VertexId b : matched_bases) {
    if (coreach.next_matched.contains(b) || reach.next_unmatched.contains(b)) {
      marked |= blossom_union_[b];
    }
  }
  jposy_ = marked;
  return marked;
}

VertexSet flower_vertices(const Graph& g, const Matching& m) {
  return ConfigurationProfile(g, m).flower_vertices();
}
VertexSet posy_vertices(const Graph& g, const Matching& m) {
  return ConfigurationProfile(g, m).posy_vertices();
}
VertexSet tposy_vertices(const Graph& g, const Matching& m) {
  return ConfigurationProfile(g, m).tposy_vertices();
}
VertexSet jflower_vertices(const Graph& g, const Matching& m) {
  return ConfigurationProfile(g, m).jflower_vertices();
}
VertexSet jposy_vertices(const Graph& g, const Matching& m) {
  return ConfigurationProfile(g, m).jposy_vertices();
}
bool exists_jposy(const Graph& g, const Matching& m) {
  return !jposy_vertices(g, m).empty();
}

bool exists_flower(const Graph& g, const Matching& m) {
  const auto sets = detail::blossom_sets_by_base(g, m);
  for (VertexId b = 0; b < g.order(); ++b) {
    if (sets[b].empty()) continue;
    if (!m.is_matched(b)) return true;
    bool found = false;
    for_each_alternating_path(
        g, m, b, Parity::matched, VertexSet{},
        [&](const VertexSequence& path, Parity last) {
          if (last != Parity::unmatched || m.is_matched(path.back())) {
            return true;
          }
          const VertexSet stem = VertexSet::of(path);
          for (VertexSet blossom : sets[b]) {
            if ((blossom & stem) == VertexSet::single(b)) found = true;
          }
          return !found;
        });
    if (found) return true;
  }
  return false;
}

namespace {

bool exists_posy_impl(const Graph& g, const Matching& m, bool tight) {
  const auto sets = detail::blossom_sets_by_base(g, m);
  for (VertexId b1 = 0; b1 < g.order(); ++b1) {
    if (sets[b1].empty() || !m.is_matched(b1)) continue;
    bool found = false;
    for_each_alternating_path(
        g, m, b1, Parity::matched, VertexSet{},
        [&](const VertexSequence& path, Parity last) {
          const VertexId b2 = path.back();
          if (last != Parity::matched || sets[b2].empty()) return true;
          if (!tight) {
            found = true;
            return false;
          }
          const VertexSet inner = interior(path);
          auto clear = [&](const std::vector<VertexSet>& side) {
            return std::any_of(side.begin(), side.end(), [&](VertexSet s) {
              return !s.intersects(inner);
            });
          };
          found = clear(sets[b1]) && clear(sets[b2]);
          return !found;
        });
    if (found) return true;
  }
  return false;
}

}  // namespace

bool exists_posy(const Graph& g, const Matching& m) {
  return exists_posy_impl(g, m, false);
}

bool exists_tposy(const Graph& g, const Matching& m) {
  return exists_posy_impl(g, m, true);
}

}  // namespace sdgraph
