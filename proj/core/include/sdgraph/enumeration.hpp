#ifndef SDGRAPH_ENUMERATION_HPP_
#define SDGRAPH_ENUMERATION_HPP_

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "sdgraph/graph.hpp"

namespace sdgraph {

// Per-vertex colours from iterated neighbourhood refinement, seeded with
// degree and triangle count. Colours are comparable across graphs: equal
// multisets are necessary for isomorphism.
std::vector<std::uint64_t> refined_colors(const Graph& g);

// Isomorphism invariant of the whole graph.
std::uint64_t invariant_hash(const Graph& g);

// Exact test by colour-guided backtracking.
bool are_isomorphic(const Graph& a, const Graph& b);

// A set of graphs closed under "keep one representative per isomorphism
// class". insert() returns the index of the class representative and whether
// it was newly added.
class IsomorphismClasses {
 public:
  struct Insertion {
    std::size_t index;
    bool added;
  };
  Insertion insert(const Graph& g);
  // Index of the stored representative isomorphic to g, or -1.
  long find(const Graph& g) const;

  const std::vector<Graph>& graphs() const { return graphs_; }
  std::size_t size() const { return graphs_.size(); }

 private:
  struct Stored {
    std::size_t index;
    std::vector<std::uint64_t> colors;
  };
  long find(const Graph& g, std::uint64_t hash,
            const std::vector<std::uint64_t>& colors) const;

  std::vector<Graph> graphs_;
  std::unordered_multimap<std::uint64_t, Stored> buckets_;
};

// Connected graphs, one per isomorphism class, generated by adding a vertex
// with every nonempty neighbourhood to each connected graph one order down
// (every connected graph has a vertex whose removal keeps it connected).
// Levels are generated lazily and cached.
class ConnectedGraphCatalog {
 public:
  ConnectedGraphCatalog();

  // All connected graphs of exactly `order` vertices (order >= 1).
  const std::vector<Graph>& of_order(int order);
  // Orders 1..max_order, in increasing order.
  std::vector<Graph> up_to(int max_order);

 private:
  std::vector<std::vector<Graph>> levels_;  // levels_[n]
};

}  // namespace sdgraph

#endif  // SDGRAPH_ENUMERATION_HPP_
