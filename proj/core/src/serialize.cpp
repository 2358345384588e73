#include "sdgraph/serialize.hpp"

#include "sdgraph/errors.hpp"
#include "sdgraph/io.hpp"

namespace sdgraph {

using nlohmann::json;

void to_json(json& j, VertexSet s) { j = s.to_vector(); }

void to_json(json& j, Edge e) { j = json::array({e.u, e.v}); }

void to_json(json& j, const Graph& g) {
  j = json{{"order", g.order()}, {"edges", g.edges()},
           {"graph6", to_graph6(g)}};
}

void to_json(json& j, const Matching& m) { j = m.edges(); }

void to_json(json& j, const Blossom& b) {
  j = json{{"base", b.base}, {"cycle", b.cycle}};
}

void to_json(json& j, const Configuration& c) {
  j = json::object();
  j["kind"] = kind_name(c);
  j["vertices"] = vertices_of(c);
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Blossom>) {
          j["blossom"] = x;
        } else if constexpr (std::is_same_v<T, Flower>) {
          j["blossom"] = x.blossom;
          j["stem"] = x.stem;
        } else if constexpr (std::is_base_of_v<Posy, T>) {
          j["blossoms"] = json::array({x.first, x.second});
          j["link"] = x.link;
        } else if constexpr (std::is_same_v<T, Jflower>) {
          j["blossom"] = x.blossom;
          j["walk"] = x.walk;
        } else {
          j["blossoms"] = json::array({x.first, x.second});
          j["walk"] = x.walk;
        }
      },
      c);
}

void to_json(json& j, const Witness& w) {
  j = json{{"matching", w.matching}, {"configuration", w.configuration}};
}

void to_json(json& j, const MarkReport& r) {
  json witnesses = json::object();
  for (const auto& [v, w] : r.witnesses) witnesses[std::to_string(v)] = w;
  j = json{{"order", r.order},
           {"v_t", r.v_t},
           {"v_esg", r.v_esg},
           {"v_j", r.v_j},
           {"maximum_matchings", r.matchings},
           {"sets_agree", r.sets_agree()},
           {"witnesses", witnesses}};
}

void to_json(json& j, const KeVerdict& v) {
  j = json{{"alpha", v.alpha}, {"mu", v.mu},         {"tau", v.tau},
           {"is_ke", v.is_ke}, {"method", to_string(v.method)}};
  if (v.method != KeMethod::direct) {
    j["maximum_matchings"] = v.matchings;
    j["matchings_with_configuration"] = v.matchings_with_configuration;
    j["uniform"] = v.uniform();
  }
}

void to_json(json& j, const Counterexample& c) {
  j = json{{"graph6", c.graph6}, {"check", c.check}, {"detail", c.detail}};
}

void to_json(json& j, const VerificationReport& r) {
  json by_order = json::object();
  for (const auto& [n, count] : r.graphs_by_order) {
    by_order[std::to_string(n)] = count;
  }
  j = json{{"name", r.name},
           {"checks", check_names(r.checks)},
           {"order_bound", r.order_bound},
           {"graphs", r.graphs},
           {"graphs_by_order", by_order},
           {"ke_graphs", r.ke_graphs},
           {"perfect_matching_graphs", r.perfect_matching_graphs},
           {"maximum_matchings", r.matchings},
           {"counterexamples", r.counterexamples},
           {"passed", r.passed()}};
}

void to_json(json& j, const ConjectureEntry& e) {
  j = json{{"graph6", e.graph6},
           {"order", e.order},
           {"class", to_string(e.verdict)},
           {"hamiltonian_cycle", e.hamiltonian_cycle}};
  if (e.verdict == ConjectureClass::counterexample) j["unmarked"] = e.unmarked;
}

void to_json(json& j, const ConjectureReport& r) {
  j = json{{"order_bound", r.order_bound},
           {"even", r.even},
           {"counts",
            {{"KE", r.count(ConjectureClass::ke)},
             {"SD", r.count(ConjectureClass::sd)},
             {"COUNTEREXAMPLE", r.count(ConjectureClass::counterexample)}}},
           {"odd_checked", r.odd_checked},
           {"odd_failures", r.odd_failures},
           {"odd_passed", r.odd_passed()}};
}

namespace {

Blossom blossom_from_json(const json& j) {
  return Blossom{j.at("cycle").get<VertexSequence>(),
                 j.at("base").get<VertexId>()};
}

}  // namespace

Configuration configuration_from_json(const json& j) {
  try {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "blossom") return blossom_from_json(j.at("blossom"));
    if (kind == "flower") {
      return Flower{blossom_from_json(j.at("blossom")),
                    j.at("stem").get<VertexSequence>()};
    }
    if (kind == "jflower") {
      return Jflower{blossom_from_json(j.at("blossom")),
                     j.at("walk").get<VertexSequence>()};
    }
    const json& pair = j.at("blossoms");
    if (pair.size() != 2) throw ParseError("expected two blossoms");
    const Blossom a = blossom_from_json(pair[0]);
    const Blossom b = blossom_from_json(pair[1]);
    if (kind == "posy") return Posy{a, b, j.at("link").get<VertexSequence>()};
    if (kind == "tposy") {
      Tposy t;
      t.first = a;
      t.second = b;
      t.link = j.at("link").get<VertexSequence>();
      return t;
    }
    if (kind == "jposy") return Jposy{a, b, j.at("walk").get<VertexSequence>()};
    throw ParseError("unknown configuration kind '" + kind + "'");
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
}

}  // namespace sdgraph
