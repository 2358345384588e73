#ifndef SDGRAPH_SRC_DETAIL_HPP_
#define SDGRAPH_SRC_DETAIL_HPP_

#include <functional>
#include <vector>

#include "sdgraph/graph.hpp"
#include "sdgraph/matching.hpp"

namespace sdgraph::detail {

// Visits every M-blossom with the given base as a vertex sequence starting
// at the base, once per direction of traversal.
bool for_each_blossom_cycle(const Graph& g, const Matching& m, VertexId base,
                            const std::function<bool(const VertexSequence&)>&
                                visit);

// Distinct blossom vertex sets for every base (index = base).
std::vector<std::vector<VertexSet>> blossom_sets_by_base(const Graph& g,
                                                         const Matching& m);

// Runs fn(i) for i in [0, count) on up to `threads` workers.
void parallel_for(std::size_t count, int threads,
                  const std::function<void(std::size_t)>& fn);

}  // namespace sdgraph::detail

#endif  // SDGRAPH_SRC_DETAIL_HPP_
