#include "sdgraph/enumeration.hpp"

#include "sdgraph/errors.hpp"

namespace sdgraph {

ConnectedGraphCatalog::ConnectedGraphCatalog() {
  levels_.resize(2);
  levels_[1].push_back(Graph(1));
}

const std::vector<Graph>& ConnectedGraphCatalog::of_order(int order) {
  if (order < 1) throw DomainError("connected graphs need order >= 1");
  if (order > 10) {
    throw CapacityError("connected graph generation is limited to order 10");
  }
  while (static_cast<int>(levels_.size()) <= order) {
    const int n = static_cast<int>(levels_.size());
    IsomorphismClasses classes;
    for (const Graph& parent : levels_[n - 1]) {
      std::vector<Edge> edges = parent.edges();
      const std::size_t kept = edges.size();
      const std::uint64_t subsets = std::uint64_t{1} << (n - 1);
      for (std::uint64_t s = 1; s < subsets; ++s) {
        edges.resize(kept);
        for (VertexId u : VertexSet(s)) edges.emplace_back(u, n - 1);
        classes.insert(Graph::from_edges(n, edges));
      }
    }
    levels_.push_back(classes.graphs());
  }
  return levels_[order];
}

std::vector<Graph> ConnectedGraphCatalog::up_to(int max_order) {
  std::vector<Graph> out;
  for (int n = 1; n <= max_order; ++n) {
    const auto& level = of_order(n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

}  // namespace sdgraph
