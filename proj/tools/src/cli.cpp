#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "render.hpp"
#include "sdgraph/configurations.hpp"
#include "sdgraph/errors.hpp"
#include "sdgraph/fixtures.hpp"
#include "sdgraph/io.hpp"
#include "sdgraph/ke.hpp"
#include "sdgraph/serialize.hpp"
#include "sdgraph/verification.hpp"

namespace sdgraph::cli {
namespace {

using nlohmann::json;

// Hard caps; flags may lower but not raise them.
constexpr int kMaxAnalyzeOrder = 24;
constexpr int kMaxSweepOrder = 10;
constexpr int kMaxEarOrder = 14;

class UsageError : public Error {
 public:
  using Error::Error;
};

struct Input {
  std::string fixture;
  std::string edges;
  std::string graph6;
  std::string file;
};

struct Loaded {
  Graph graph;
  std::optional<Matching> matching;  // drawn with a fixture
  std::vector<std::uint64_t> labels;
  std::string source;
};

bool has_suffix(const std::string& s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool is_graph6_path(const std::string& path) {
  return has_suffix(path, ".g6") || has_suffix(path, ".graph6");
}

std::vector<std::uint64_t> identity_labels(int n) {
  std::vector<std::uint64_t> out(n);
  for (int i = 0; i < n; ++i) out[i] = i;
  return out;
}

Loaded load(const Input& in) {
  const int given = !in.fixture.empty() + !in.edges.empty() +
                    !in.graph6.empty() + !in.file.empty();
  if (given != 1) {
    throw UsageError(
        "give exactly one of --fixture, --edges, --graph6, --file");
  }
  Loaded out;
  if (!in.fixture.empty()) {
    Fixture f = named_fixture(in.fixture);
    out.matching = Matching::from_edges(f.graph, f.matching);
    out.graph = std::move(f.graph);
    out.source = "fixture " + in.fixture;
  } else if (!in.graph6.empty()) {
    out.graph = parse_graph6(in.graph6);
    out.source = "graph6 " + in.graph6;
  } else if (!in.edges.empty()) {
    ParsedGraph p = parse_edge_list(in.edges);
    out.graph = std::move(p.graph);
    out.labels = std::move(p.labels);
    out.source = "edge list";
  } else if (is_graph6_path(in.file)) {
    std::istringstream text(slurp(in.file));
    std::vector<Graph> graphs = read_graph6_stream(text);
    if (graphs.size() != 1) {
      throw UsageError("'" + in.file + "' holds " +
                       std::to_string(graphs.size()) +
                       " graphs; analyze takes one");
    }
    out.graph = std::move(graphs.front());
    out.source = "file " + in.file;
  } else {
    ParsedGraph p = parse_edge_list(slurp(in.file));
    out.graph = std::move(p.graph);
    out.labels = std::move(p.labels);
    out.source = "file " + in.file;
  }
  if (out.labels.empty()) out.labels = identity_labels(out.graph.order());
  return out;
}

bool labels_are_identity(const Loaded& g) {
  return g.labels == identity_labels(g.graph.order());
}

void add_input_options(CLI::App* app, Input& in) {
  app->add_option("--fixture", in.fixture, "Named example graph")
      ->check(CLI::IsMember(fixture_names()));
  app->add_option("--edges", in.edges,
                  "Inline edge list, e.g. \"0 1, 1 2\" (';' and newlines "
                  "also separate records)");
  app->add_option("--graph6", in.graph6, "graph6 string");
  app->add_option("--file", in.file,
                  "Edge-list file, or graph6 when named *.g6 / *.graph6");
}

void check_order_cap(int order, int cap, const char* what) {
  if (order > cap) {
    throw CapacityError(std::string(what) + " bound " +
                        std::to_string(order) + " exceeds the hard cap " +
                        std::to_string(cap));
  }
}

// analyze ---------------------------------------------------------------

struct Analysis {
  Loaded input;
  Matching matching;
  std::vector<Blossom> blossoms;
  KeVerdict direct;
  KeVerdict sterboul;
  KeVerdict tposy;
  MarkReport marks;
};

Analysis analyze(Loaded input, int max_order, int threads) {
  check_order_cap(max_order, kMaxAnalyzeOrder, "--max-order");
  if (input.graph.order() > max_order) {
    throw CapacityError("graph has " + std::to_string(input.graph.order()) +
                        " vertices; raise --max-order (cap " +
                        std::to_string(kMaxAnalyzeOrder) + ")");
  }
  Analysis a{std::move(input), {}, {}, {}, {}, {}, {}};
  const Graph& g = a.input.graph;
  a.matching = a.input.matching ? *a.input.matching : maximum_matching(g);
  a.blossoms = enumerate_blossoms(g, a.matching, max_order);
  a.direct = is_ke_direct(g);
  a.sterboul = is_ke_sterboul(g, max_order);
  a.tposy = is_ke_tposy(g, max_order);
  MarkOptions options;
  options.max_order = max_order;
  options.witnesses = true;
  options.threads = threads;
  a.marks = mark_vertices(g, options);
  return a;
}

json analysis_json(const Analysis& a) {
  json j;
  j["source"] = a.input.source;
  j["graph"] = a.input.graph;
  if (!labels_are_identity(a.input)) j["labels"] = a.input.labels;
  j["mu"] = a.direct.mu;
  j["alpha"] = a.direct.alpha;
  j["tau"] = a.direct.tau;
  j["matching"] = a.matching;
  j["blossoms"] = a.blossoms;
  j["ke"] = {{"direct", a.direct}, {"sterboul", a.sterboul},
             {"tposy", a.tposy}};
  j["marks"] = a.marks;
  j["sd_graph"] = a.marks.v_t == a.input.graph.vertices();
  return j;
}

void analysis_text(std::ostream& out, const Analysis& a) {
  const Graph& g = a.input.graph;
  auto yes = [](bool b) { return b ? "yes" : "no"; };
  out << "source: " << a.input.source << "\n"
      << "order " << g.order() << ", size " << g.size() << ", graph6 "
      << to_graph6(g) << "\n";
  if (!labels_are_identity(a.input)) {
    out << "labels:";
    for (std::size_t i = 0; i < a.input.labels.size(); ++i) {
      out << ' ' << i << '=' << a.input.labels[i];
    }
    out << "\n";
  }
  out << "mu " << a.direct.mu << ", alpha " << a.direct.alpha << ", tau "
      << a.direct.tau << "\n"
      << "KE: direct " << yes(a.direct.is_ke) << ", flower/posy "
      << yes(a.sterboul.is_ke) << ", flower/Tposy " << yes(a.tposy.is_ke)
      << "\n"
      << "maximum matchings: " << a.marks.matchings << "\n"
      << "matching shown: " << matching_text(a.matching) << "\n"
      << "blossoms under it: " << a.blossoms.size() << "\n";
  for (const Blossom& b : a.blossoms) {
    out << "  base " << b.base << ": " << sequence_text(b.cycle) << "\n";
  }
  out << "V_T   " << set_text(a.marks.v_t) << "\n"
      << "V_ESG " << set_text(a.marks.v_esg) << "\n"
      << "V_J   " << set_text(a.marks.v_j) << "\n"
      << "SD graph: " << yes(a.marks.v_t == g.vertices()) << "\n";
  if (!a.marks.witnesses.empty()) out << "witnesses:\n";
  for (const auto& [v, w] : a.marks.witnesses) {
    out << "  " << v << ": " << describe(w.configuration) << "  [M = "
        << matching_text(w.matching) << "]\n";
  }
}

// verify ----------------------------------------------------------------

struct VerifyArgs {
  std::string theorem;
  std::optional<int> order;
  std::string file;
};

VerificationReport run_verify(const VerifyArgs& args, int threads) {
  if (args.theorem == "eartposy") {
    const int order = args.order.value_or(12);
    check_order_cap(order, kMaxEarOrder, "--max-order");
    return verify_ear_tposy(order, 5, threads);
  }
  const std::optional<unsigned> checks = parse_check(args.theorem);
  if (!checks) throw UsageError("unknown theorem '" + args.theorem + "'");
  if (!args.file.empty()) {
    std::istringstream text(slurp(args.file));
    const std::vector<Graph> graphs = read_graph6_stream(text);
    for (const Graph& g : graphs) {
      check_order_cap(g.order(), kDefaultMatchingEnumerationBound,
                      "graph order");
    }
    VerificationReport r = verify_graphs(graphs, *checks, threads);
    r.name = args.theorem + " (" + args.file + ")";
    return r;
  }
  const int order = args.order.value_or(7);
  if (order < 0) throw UsageError("--max-order must be >= 0");
  check_order_cap(order, kMaxSweepOrder, "--max-order");
  VerificationReport r = verify_theorems(order, *checks, threads);
  r.name = args.theorem;
  return r;
}

int default_threads() {
  if (const char* env = std::getenv("SDGRAPH_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Blossom configurations, vertex marking and Konig-Egervary "
               "tests for small graphs"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  int threads = default_threads();
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--threads", threads,
                 "Worker threads (default: available parallelism, or "
                 "SDGRAPH_THREADS)")
      ->check(CLI::PositiveNumber);

  Input input;
  int max_order = kMaxAnalyzeOrder;
  CLI::App* analyze_cmd =
      app.add_subcommand("analyze", "Matching, KE verdicts and marked sets");
  add_input_options(analyze_cmd, input);
  analyze_cmd
      ->add_option("-n,--max-order", max_order,
                   "Largest order to enumerate maximum matchings for")
      ->capture_default_str();

  VerifyArgs verify;
  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "Sweep all connected graphs up to an order");
  verify_cmd->add_option("theorem", verify.theorem,
                         "main | sterboul | tposy | jposy | corollary | "
                         "all | eartposy")
      ->required()
      ->check(CLI::IsMember({"main", "sterboul", "tposy", "jposy",
                             "corollary", "all", "eartposy"}));
  verify_cmd->add_option("-n,--max-order", verify.order,
                         "Largest order (default 7; eartposy: 12)");
  verify_cmd->add_option("--file", verify.file,
                         "graph6 stream to check instead ('-' for stdin)");

  Input witness_input;
  std::uint64_t witness_vertex = 0;
  int witness_order = kMaxAnalyzeOrder;
  CLI::App* witness_cmd = app.add_subcommand(
      "witness", "Flower or Tposy through a vertex, if any");
  add_input_options(witness_cmd, witness_input);
  witness_cmd->add_option("vertex", witness_vertex, "Vertex label")
      ->required();
  witness_cmd->add_option("-n,--max-order", witness_order,
                          "Largest order to enumerate maximum matchings for")
      ->capture_default_str();

  int conjecture_order = 8;
  bool list_all = false;
  CLI::App* conjecture_cmd = app.add_subcommand(
      "conjecture", "Classify Hamiltonian graphs as KE or SD");
  conjecture_cmd
      ->add_option("-n,--max-order", conjecture_order, "Largest order")
      ->capture_default_str();
  conjecture_cmd->add_flag("--list", list_all,
                           "Text output: list every even-order graph");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  const bool as_json = format == "json";
  try {
    if (*analyze_cmd) {
      const Analysis a = analyze(load(input), max_order, threads);
      if (as_json) {
        out << analysis_json(a).dump(2) << "\n";
      } else {
        analysis_text(out, a);
      }
      return kOk;
    }
    if (*verify_cmd) {
      const VerificationReport r = run_verify(verify, threads);
      if (as_json) {
        out << json(r).dump(2) << "\n";
      } else {
        print_verification(out, r);
      }
      return r.passed() ? kOk : kCounterexample;
    }
    if (*witness_cmd) {
      const Loaded in = load(witness_input);
      check_order_cap(witness_order, kMaxAnalyzeOrder, "--max-order");
      const auto at = std::find(in.labels.begin(), in.labels.end(),
                                witness_vertex);
      if (at == in.labels.end()) {
        throw UsageError("vertex " + std::to_string(witness_vertex) +
                         " is not in the graph");
      }
      const VertexId v = static_cast<VertexId>(at - in.labels.begin());
      const std::optional<Witness> w =
          witness_for_vertex(in.graph, v, witness_order);
      if (as_json) {
        json j{{"vertex", witness_vertex}, {"marked", w.has_value()}};
        if (w) j["witness"] = *w;
        out << j.dump(2) << "\n";
      } else if (w) {
        out << "vertex " << witness_vertex << ": "
            << describe(w->configuration) << "\n"
            << "maximum matching: " << matching_text(w->matching) << "\n";
      } else {
        out << "vertex " << witness_vertex << ": unmarked\n";
      }
      return kOk;
    }
    if (*conjecture_cmd) {
      if (conjecture_order < 0) throw UsageError("--max-order must be >= 0");
      check_order_cap(conjecture_order, kMaxSweepOrder, "--max-order");
      const ConjectureReport r = conjecture_scan(conjecture_order, threads);
      if (as_json) {
        out << json(r).dump(2) << "\n";
      } else {
        print_conjecture(out, r, list_all);
      }
      return kOk;
    }
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << "\n";
    return kCapacity;
  } catch (const InvariantError& e) {
    err << "invariant violated: " << e.what() << "\n";
    return kCounterexample;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  std::vector<const char*> argv{"sdgraph"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace sdgraph::cli
