#ifndef SDGRAPH_KE_HPP_
#define SDGRAPH_KE_HPP_

#include <optional>
#include <string_view>

#include "sdgraph/graph.hpp"
#include "sdgraph/matching.hpp"

namespace sdgraph {

inline constexpr int kIndependenceBound = 40;
inline constexpr int kHamiltonianBound = 12;

// alpha(G), exact. Throws CapacityError above max_order.
int independence_number(const Graph& g, int max_order = kIndependenceBound);

// A maximum independent set (same search as independence_number).
VertexSet maximum_independent_set(const Graph& g,
                                  int max_order = kIndependenceBound);

enum class KeMethod { direct, sterboul, tposy };
std::string_view to_string(KeMethod method);

struct KeVerdict {
  int alpha = 0;
  int mu = 0;
  int tau = 0;  // |V| - alpha
  bool is_ke = false;
  KeMethod method = KeMethod::direct;
  // Configuration methods only: number of maximum matchings examined and
  // how many of them carried a configuration.
  int matchings = 0;
  int matchings_with_configuration = 0;

  // Either every maximum matching carries a configuration or none does.
  bool uniform() const {
    return matchings_with_configuration == 0 ||
           matchings_with_configuration == matchings;
  }
};

// alpha + mu == |V|.
KeVerdict is_ke_direct(const Graph& g);
// KE iff no maximum matching has a flower or a posy.
KeVerdict is_ke_sterboul(const Graph& g,
                         int max_order = kDefaultMatchingEnumerationBound);
// KE iff no maximum matching has a flower or a Tposy.
KeVerdict is_ke_tposy(const Graph& g,
                      int max_order = kDefaultMatchingEnumerationBound);

// K2 counts as Hamiltonian (the closed walk 0,1,0); K1 does not. Throws
// CapacityError above kHamiltonianBound.
bool is_hamiltonian(const Graph& g);
// Cycle as an open vertex sequence starting at 0.
std::optional<VertexSequence> hamiltonian_cycle(const Graph& g);

}  // namespace sdgraph

#endif  // SDGRAPH_KE_HPP_
