#ifndef SDGRAPH_SERIALIZE_HPP_
#define SDGRAPH_SERIALIZE_HPP_

// JSON encodings. Objects use nlohmann::json (sorted keys); vertex sets and
// edge lists are emitted sorted, so output is deterministic.

#include <nlohmann/json.hpp>

#include "sdgraph/blossom.hpp"
#include "sdgraph/configurations.hpp"
#include "sdgraph/graph.hpp"
#include "sdgraph/ke.hpp"
#include "sdgraph/matching.hpp"
#include "sdgraph/verification.hpp"

namespace sdgraph {

void to_json(nlohmann::json& j, VertexSet s);
void to_json(nlohmann::json& j, Edge e);
void to_json(nlohmann::json& j, const Graph& g);
void to_json(nlohmann::json& j, const Matching& m);
void to_json(nlohmann::json& j, const Blossom& b);
void to_json(nlohmann::json& j, const Configuration& c);
void to_json(nlohmann::json& j, const Witness& w);
void to_json(nlohmann::json& j, const MarkReport& r);
void to_json(nlohmann::json& j, const KeVerdict& v);
void to_json(nlohmann::json& j, const Counterexample& c);
void to_json(nlohmann::json& j, const VerificationReport& r);
void to_json(nlohmann::json& j, const ConjectureEntry& e);
void to_json(nlohmann::json& j, const ConjectureReport& r);

// Inverse of the Configuration encoding; throws ParseError on malformed
// input.
Configuration configuration_from_json(const nlohmann::json& j);

}  // namespace sdgraph

#endif  // SDGRAPH_SERIALIZE_HPP_
