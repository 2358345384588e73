#include <algorithm>
#include <atomic>
#include <string>
#include <thread>

#include "detail.hpp"
#include "sdgraph/configurations.hpp"
#include "sdgraph/errors.hpp"

namespace sdgraph {
namespace {

std::vector<VertexId> open_cycle(std::span<const VertexId> cycle) {
  std::vector<VertexId> c(cycle.begin(), cycle.end());
  if (c.size() > 1 && c.front() == c.back()) c.pop_back();
  return c;
}

}  // namespace

bool is_blossom(const Graph& g, const Matching& m,
                std::span<const VertexId> cycle) {
  const std::vector<VertexId> c = open_cycle(cycle);
  if (c.size() % 2 == 0 || !is_simple_cycle(g, c)) return false;
  const std::size_t k = c.size();
  std::size_t matched = 0;
  for (std::size_t i = 0; i < k; ++i) {
    if (m.contains(c[i], c[(i + 1) % k])) ++matched;
  }
  return 2 * matched + 1 == k;
}

Blossom make_blossom(const Graph& g, const Matching& m,
                     std::span<const VertexId> cycle) {
  if (!is_blossom(g, m, cycle)) {
    throw DomainError("cycle is not an M-blossom");
  }
  std::vector<VertexId> c = open_cycle(cycle);
  const std::size_t k = c.size();
  // The base is the vertex whose two cycle edges are both unmatched.
  std::size_t at = k;
  for (std::size_t i = 0; i < k; ++i) {
    if (!m.contains(c[i], c[(i + 1) % k]) &&
        !m.contains(c[i], c[(i + k - 1) % k])) {
      at = i;
      break;
    }
  }
  if (at == k) throw InvariantError("blossom without a base");
  std::rotate(c.begin(), c.begin() + at, c.end());
  if (c[1] > c.back()) std::reverse(c.begin() + 1, c.end());
  Blossom b;
  b.base = c.front();
  b.cycle = std::move(c);
  return b;
}

namespace detail {

bool for_each_blossom_cycle(
    const Graph& g, const Matching& m, VertexId base,
    const std::function<bool(const VertexSequence&)>& visit) {
  // base, x1, M(x1), x2, M(x2), ..., xk, M(xk), back to base; all the edges
  // leaving base and the M(xi) are unmatched.
  VertexSequence path{base};
  VertexSet on_path = VertexSet::single(base);
  std::function<bool()> extend = [&]() -> bool {
    const VertexId v = path.back();
    VertexSet next = g.neighbors(v) - on_path;
    if (m.is_matched(v)) next.erase(m.mate(v));
    for (VertexId x : next) {
      if (!m.is_matched(x)) continue;
      const VertexId y = m.mate(x);
      if (on_path.contains(y)) continue;
      path.push_back(x);
      path.push_back(y);
      on_path.insert(x);
      on_path.insert(y);
      bool go_on = true;
      if (g.adjacent(y, base)) go_on = visit(path);
      if (go_on) go_on = extend();
      on_path.erase(x);
      on_path.erase(y);
      path.pop_back();
      path.pop_back();
      if (!go_on) return false;
    }
    return true;
  };
  return extend();
}

std::vector<std::vector<VertexSet>> blossom_sets_by_base(const Graph& g,
                                                         const Matching& m) {
  std::vector<std::vector<VertexSet>> out(g.order());
  for (VertexId b = 0; b < g.order(); ++b) {
    auto& sets = out[b];
    for_each_blossom_cycle(g, m, b, [&sets](const VertexSequence& cycle) {
      sets.push_back(VertexSet::of(cycle));
      return true;
    });
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  }
  return out;
}

void parallel_for(std::size_t count, int threads,
                  const std::function<void(std::size_t)>& fn) {
  const std::size_t workers = std::min<std::size_t>(
      count, static_cast<std::size_t>(std::max(threads, 1)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&]() {
      for (std::size_t i = next++; i < count && !failed; i = next++) {
        try {
          fn(i);
        } catch (...) {
          if (!failed.exchange(true)) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace detail

bool for_each_blossom(const Graph& g, const Matching& m,
                      const std::function<bool(const Blossom&)>& visit) {
  for (VertexId b = 0; b < g.order(); ++b) {
    const bool go_on = detail::for_each_blossom_cycle(
        g, m, b, [&](const VertexSequence& cycle) {
          // Each cycle is met in both directions; keep the canonical one.
          if (cycle[1] > cycle.back()) return true;
          return visit(Blossom{cycle, b});
        });
    if (!go_on) return false;
  }
  return true;
}

std::vector<Blossom> enumerate_blossoms(const Graph& g, const Matching& m,
                                        int max_order) {
  if (g.order() > max_order) {
    throw CapacityError("blossom enumeration bound is order " +
                        std::to_string(max_order));
  }
  std::vector<Blossom> out;
  for_each_blossom(g, m, [&out](const Blossom& b) {
    out.push_back(b);
    return true;
  });
  return out;
}

}  // namespace sdgraph
