#include <algorithm>
#include <array>
#include <numeric>

#include "sdgraph/enumeration.hpp"

namespace sdgraph {
namespace {

constexpr std::uint64_t mix(std::uint64_t x) {
  // splitmix64 finaliser
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

int distinct(std::span<const std::uint64_t> colors) {
  std::array<std::uint64_t, Graph::kMaxOrder> sorted{};
  std::copy(colors.begin(), colors.end(), sorted.begin());
  std::sort(sorted.begin(), sorted.begin() + colors.size());
  return static_cast<int>(
      std::unique(sorted.begin(), sorted.begin() + colors.size()) -
      sorted.begin());
}

}  // namespace

std::vector<std::uint64_t> refined_colors(const Graph& g) {
  const int n = g.order();
  std::vector<std::uint64_t> color(n);
  for (VertexId v = 0; v < n; ++v) {
    int triangles = 0;
    for (VertexId u : g.neighbors(v)) {
      triangles += (g.neighbors(u) & g.neighbors(v)).size();
    }
    color[v] = mix((static_cast<std::uint64_t>(g.degree(v)) << 32) |
                   static_cast<std::uint64_t>(triangles / 2));
  }
  std::vector<std::uint64_t> next(n);
  int classes = distinct(color);
  for (;;) {
    for (VertexId v = 0; v < n; ++v) {
      // Order-independent multiset hash of the neighbour colours.
      std::uint64_t sum = 0;
      std::uint64_t sum_sq = 0;
      for (VertexId u : g.neighbors(v)) {
        sum += mix(color[u]);
        sum_sq += mix(color[u] ^ 0x5851f42d4c957f2dULL);
      }
      next[v] = mix(color[v] ^ mix(sum) ^ (mix(sum_sq) << 1));
    }
    color.swap(next);
    const int now = distinct(color);
    if (now == classes) break;
    classes = now;
  }
  return color;
}

namespace {

std::uint64_t hash_of(const Graph& g, std::vector<std::uint64_t> colors) {
  std::sort(colors.begin(), colors.end());
  std::uint64_t h = mix(static_cast<std::uint64_t>(g.order()) << 32 |
                        static_cast<std::uint64_t>(g.size()));
  for (std::uint64_t c : colors) h = mix(h ^ c);
  return h;
}

}  // namespace

std::uint64_t invariant_hash(const Graph& g) {
  return hash_of(g, refined_colors(g));
}

namespace {

class Matcher {
 public:
  Matcher(const Graph& a, const Graph& b,
          const std::vector<std::uint64_t>& ca,
          const std::vector<std::uint64_t>& cb)
      : a_(a), b_(b), ca_(ca), cb_(cb), map_(a.order(), -1) {
    // Visit vertices of `a` so that each (after the first of its component)
    // has an already-placed neighbour, starting from the rarest colour.
    const int n = a.order();
    std::vector<int> freq(n);
    for (int v = 0; v < n; ++v) {
      freq[v] = static_cast<int>(std::count(ca.begin(), ca.end(), ca[v]));
    }
    VertexSet placed;
    while (static_cast<int>(order_.size()) < n) {
      VertexSet frontier;
      for (VertexId v : placed) frontier |= a.neighbors(v);
      frontier -= placed;
      VertexSet pool = frontier.empty() ? a.vertices() - placed : frontier;
      VertexId best = pool.front();
      for (VertexId v : pool) {
        if (freq[v] < freq[best]) best = v;
      }
      order_.push_back(best);
      placed.insert(best);
    }
  }

  bool run() { return extend(0); }

 private:
  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const VertexId x = order_[depth];
    for (VertexId y = 0; y < b_.order(); ++y) {
      if (used_.contains(y) || cb_[y] != ca_[x]) continue;
      bool ok = true;
      for (std::size_t i = 0; i < depth && ok; ++i) {
        const VertexId px = order_[i];
        ok = a_.adjacent(x, px) == b_.adjacent(y, map_[px]);
      }
      if (!ok) continue;
      map_[x] = y;
      used_.insert(y);
      if (extend(depth + 1)) return true;
      used_.erase(y);
      map_[x] = -1;
    }
    return false;
  }

  const Graph& a_;
  const Graph& b_;
  const std::vector<std::uint64_t>& ca_;
  const std::vector<std::uint64_t>& cb_;
  std::vector<VertexId> order_;
  std::vector<VertexId> map_;
  VertexSet used_;
};

bool isomorphic_with_colors(const Graph& a, const Graph& b,
                            const std::vector<std::uint64_t>& ca,
                            const std::vector<std::uint64_t>& cb) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  std::vector<std::uint64_t> sa = ca;
  std::vector<std::uint64_t> sb = cb;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return false;
  return Matcher(a, b, ca, cb).run();
}

}  // namespace

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return isomorphic_with_colors(a, b, refined_colors(a), refined_colors(b));
}

long IsomorphismClasses::find(const Graph& g, std::uint64_t hash,
                              const std::vector<std::uint64_t>& colors) const {
  auto [lo, hi] = buckets_.equal_range(hash);
  for (auto it = lo; it != hi; ++it) {
    if (isomorphic_with_colors(graphs_[it->second.index], g,
                               it->second.colors, colors)) {
      return static_cast<long>(it->second.index);
    }
  }
  return -1;
}

long IsomorphismClasses::find(const Graph& g) const {
  std::vector<std::uint64_t> colors = refined_colors(g);
  const std::uint64_t h = hash_of(g, colors);
  return find(g, h, colors);
}

IsomorphismClasses::Insertion IsomorphismClasses::insert(const Graph& g) {
  std::vector<std::uint64_t> colors = refined_colors(g);
  const std::uint64_t h = hash_of(g, colors);
  if (long found = find(g, h, colors); found >= 0) {
    return {static_cast<std::size_t>(found), false};
  }
  graphs_.push_back(g);
  buckets_.emplace(h, Stored{graphs_.size() - 1, std::move(colors)});
  return {graphs_.size() - 1, true};
}

}  // namespace sdgraph
