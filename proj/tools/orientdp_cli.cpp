// Command-line front end. Talks to the solver exclusively through the C API.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "orientdp/orientdp.h"

namespace {

using json = nlohmann::ordered_json;

enum Exit : int { kYes = 0, kNo = 1, kUsage = 2, kCapRefused = 3, kInternal = 4 };

struct CliFailure {
  int code;
  std::string message;
};

[[noreturn]] void raise(odp_status status) {
  std::string message = std::string(odp_status_string(status)) + ": " + odp_last_error();
  switch (status) {
    case ODP_ERR_CAP_EXCEEDED: throw CliFailure{kCapRefused, message};
    case ODP_ERR_INTERNAL: throw CliFailure{kInternal, message};
    default: throw CliFailure{kUsage, message};
  }
}

void check(odp_status status) {
  if (status != ODP_OK) raise(status);
}

struct GraphDeleter {
  void operator()(odp_graph* g) const { odp_graph_free(g); }
};
struct DecompositionDeleter {
  void operator()(odp_decomposition* d) const { odp_decomposition_free(d); }
};
struct OracleDeleter {
  void operator()(odp_oracle_result* r) const { odp_oracle_result_free(r); }
};
struct ReportDeleter {
  void operator()(odp_route_report* r) const { odp_route_report_free(r); }
};

using Graph = std::unique_ptr<odp_graph, GraphDeleter>;
using Decomposition = std::unique_ptr<odp_decomposition, DecompositionDeleter>;
using OracleResult = std::unique_ptr<odp_oracle_result, OracleDeleter>;
using RouteReport = std::unique_ptr<odp_route_report, ReportDeleter>;

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliFailure{kUsage, "cannot open " + path};
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Graph load_graph(const std::string& path) {
  const std::string text = read_input(path);
  odp_graph* g = nullptr;
  check(odp_graph_parse(text.data(), text.size(), &g));
  return Graph(g);
}

json distance_json(odp_distance d) {
  if (d.is_infinite) return "inf";
  return d.value;
}

json input_json(const odp_graph* g) {
  return {{"n", odp_graph_vertex_count(g)}, {"m", odp_graph_edge_count(g)}};
}

json arcs_json(const odp_graph* g, const std::uint8_t* bits, std::size_t count) {
  json arcs = json::array();
  for (std::size_t i = 0; i < count; ++i) {
    std::uint32_t u = 0;
    std::uint32_t v = 0;
    check(odp_graph_edge(g, i, &u, &v));
    arcs.push_back(bits[i] ? json::array({v, u}) : json::array({u, v}));
  }
  return arcs;
}

// Re-measures a witness before it is printed. A mismatch is a solver bug.
void recheck(const odp_graph* g, const std::uint8_t* bits, std::size_t count,
             bool (*accept)(odp_distance diameter, odp_distance wiener, std::uint64_t expected),
             std::uint64_t expected) {
  odp_distance diameter{};
  odp_distance wiener{};
  check(odp_orientation_measures(g, bits, count, &diameter, &wiener));
  if (!accept(diameter, wiener, expected)) {
    throw CliFailure{kInternal, "witness failed re-verification"};
  }
}

std::size_t oracle_cap_from_env(std::size_t fallback) {
  const char* env = std::getenv("ORIENTDP_ORACLE_CAP");
  if (!env || !*env) return fallback;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0') throw CliFailure{kUsage, "ORIENTDP_ORACLE_CAP must be an integer"};
  return static_cast<std::size_t>(v);
}

odp_strategy parse_strategy(const std::string& s) {
  return s == "min-fill" ? ODP_MIN_FILL : ODP_MIN_DEGREE;
}

struct Output {
  bool quiet = false;

  void emit(const json& doc) const {
    if (!quiet) std::cout << doc.dump() << '\n';
  }
  void emit_text(const std::string& text) const {
    if (!quiet) std::cout << text;
  }
};

double millis_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orientations of bounded diameter and minimum Wiener index"};
  app.require_subcommand(1);

  Output out;
  unsigned threads = 1;
  std::optional<std::size_t> cap_flag;
  app.add_flag("-q,--quiet", out.quiet, "Suppress all output except the exit code");
  app.add_option("--threads", threads, "Worker threads for the exhaustive oracle (0 = all cores)");
  app.add_option("--cap", cap_flag, "Oracle edge cap (overrides ORIENTDP_ORACLE_CAP)");

  std::string file = "-";
  std::uint64_t bound = 0;
  bool planar = false;
  std::string strategy = "min-degree";
  std::string td_out;
  std::string family;
  std::uint32_t parameter = 0;

  auto* decide = app.add_subcommand("decide-diam", "Decide whether an orientation of diameter <= L exists");
  decide->add_option("--l", bound, "Diameter bound L")->required();
  decide->add_flag("--planar", planar, "Caller asserts the graph is planar");
  decide->add_option("--strategy", strategy)->check(CLI::IsMember({"min-degree", "min-fill"}));
  decide->add_option("file", file, "Edge list, '-' for stdin")->required();

  auto* min_diam = app.add_subcommand("min-diam", "Least diameter <= MAX over orientations, via the DP");
  min_diam->add_option("--max", bound, "Largest diameter to try")->required();
  min_diam->add_option("file", file)->required();

  auto* oracle_diam = app.add_subcommand("oracle-diam", "Exhaustive minimum oriented diameter");
  oracle_diam->add_option("file", file)->required();

  auto* oracle_wiener = app.add_subcommand("oracle-wiener", "Exhaustive minimum oriented Wiener index");
  oracle_wiener->add_option("file", file)->required();

  auto* threshold = app.add_subcommand("wiener-threshold", "Print 2(n^2-n)-m");
  threshold->add_option("file", file)->required();

  auto* reduce = app.add_subcommand("reduce-wiener", "Emit the Wiener-index instance for the diameter-2 question");
  reduce->add_option("file", file)->required();

  auto* tdcmd = app.add_subcommand("td", "Heuristic tree decomposition");
  tdcmd->add_option("--strategy", strategy)->check(CLI::IsMember({"min-degree", "min-fill"}));
  tdcmd->add_option("--out", td_out, "Also write the decomposition in b/t text format");
  tdcmd->add_option("file", file)->required();

  auto* gen = app.add_subcommand("gen", "Print a generated graph as an edge list");
  gen->add_option("family", family, "path, cycle, complete, grid or book")->required();
  gen->add_option("p", parameter, "Size parameter")->required();

  auto* thm1 = app.add_subcommand("verify-thm1", "Check the diameter-2 / Wiener-threshold equivalence");
  thm1->add_option("file", file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    odp_oracle_options oracle_options = odp_oracle_default_options();
    oracle_options.edge_cap = cap_flag ? *cap_flag : oracle_cap_from_env(oracle_options.edge_cap);
    oracle_options.threads = threads;

    if (gen->parsed()) {
      odp_graph* raw = nullptr;
      check(odp_graph_generate(family.c_str(), parameter, &raw));
      Graph g(raw);
      std::size_t needed = 0;
      odp_graph_serialize(g.get(), nullptr, 0, &needed);
      std::string text(needed, '\0');
      check(odp_graph_serialize(g.get(), text.data(), text.size(), &needed));
      text.resize(needed - 1);
      out.emit_text(text);
      return kYes;
    }

    const Graph g = load_graph(file);
    json doc;

    if (decide->parsed()) {
      odp_route_report* raw = nullptr;
      check(odp_decide_orientation(g.get(), bound, planar ? 1 : 0, parse_strategy(strategy), &raw));
      RouteReport report(raw);
      const bool yes = odp_route_report_answer(report.get()) != 0;
      doc["command"] = "decide-diam";
      doc["input"] = input_json(g.get());
      doc["l"] = bound;
      doc["answer"] = yes ? "yes" : "no";
      doc["route"] = odp_route_report_route(report.get());
      if (const long w = odp_route_report_width(report.get()); w >= 0) doc["width"] = w;
      doc["threshold"] = odp_route_report_threshold(report.get());
      if (yes) {
        std::size_t count = 0;
        const auto* bits = odp_route_report_witness(report.get(), &count);
        if (!bits) throw CliFailure{kInternal, "yes answer without witness"};
        recheck(g.get(), bits, count,
                [](odp_distance d, odp_distance, std::uint64_t l) { return !d.is_infinite && d.value <= l; },
                bound);
        doc["witness"] = arcs_json(g.get(), bits, count);
      }
      json stats;
      if (std::string(odp_route_report_route(report.get())) == "dp") {
        stats["states_peak"] = odp_route_report_peak_states(report.get());
      }
      stats["millis"] = millis_since(start);
      doc["stats"] = stats;
      out.emit(doc);
      return yes ? kYes : kNo;
    }

    if (min_diam->parsed()) {
      odp_distance value{};
      std::vector<std::uint8_t> witness(odp_graph_edge_count(g.get()));
      check(odp_minimize_diameter(g.get(), bound, &value, witness.data()));
      doc["command"] = "min-diam";
      doc["input"] = input_json(g.get());
      doc["max"] = bound;
      doc["value"] = distance_json(value);
      if (!value.is_infinite) {
        recheck(g.get(), witness.data(), witness.size(),
                [](odp_distance d, odp_distance, std::uint64_t v) { return !d.is_infinite && d.value == v; },
                value.value);
        doc["witness"] = arcs_json(g.get(), witness.data(), witness.size());
      }
      doc["stats"] = {{"millis", millis_since(start)}};
      out.emit(doc);
      return kYes;
    }

    if (oracle_diam->parsed() || oracle_wiener->parsed()) {
      const bool diam = oracle_diam->parsed();
      odp_oracle_result* raw = nullptr;
      check(diam ? odp_oracle_min_diameter(g.get(), &oracle_options, &raw)
                 : odp_oracle_min_wiener(g.get(), &oracle_options, &raw));
      OracleResult result(raw);
      const odp_distance optimum = odp_oracle_result_optimum(result.get());
      doc["command"] = diam ? "oracle-diam" : "oracle-wiener";
      doc["input"] = input_json(g.get());
      doc["value"] = distance_json(optimum);
      if (!optimum.is_infinite) {
        std::size_t count = 0;
        const auto* bits = odp_oracle_result_witness(result.get(), &count);
        if (diam) {
          recheck(g.get(), bits, count,
                  [](odp_distance d, odp_distance, std::uint64_t v) { return !d.is_infinite && d.value == v; },
                  optimum.value);
        } else {
          recheck(g.get(), bits, count,
                  [](odp_distance, odp_distance w, std::uint64_t v) { return !w.is_infinite && w.value == v; },
                  optimum.value);
        }
        doc["witness"] = arcs_json(g.get(), bits, count);
      }
      doc["stats"] = {{"orientations_explored", odp_oracle_result_explored(result.get())},
                      {"millis", millis_since(start)}};
      out.emit(doc);
      return kYes;
    }

    if (threshold->parsed()) {
      doc["command"] = "wiener-threshold";
      doc["input"] = input_json(g.get());
      doc["value"] = odp_wiener_threshold(g.get());
      doc["stats"] = {{"millis", millis_since(start)}};
      out.emit(doc);
      return kYes;
    }

    if (reduce->parsed()) {
      json edges = json::array();
      for (std::size_t i = 0; i < odp_graph_edge_count(g.get()); ++i) {
        std::uint32_t u = 0;
        std::uint32_t v = 0;
        check(odp_graph_edge(g.get(), i, &u, &v));
        edges.push_back({u, v});
      }
      doc["command"] = "reduce-wiener";
      doc["input"] = input_json(g.get());
      doc["instance"] = {{"n", odp_graph_vertex_count(g.get())},
                         {"edges", edges},
                         {"k", odp_wiener_threshold(g.get())}};
      doc["stats"] = {{"millis", millis_since(start)}};
      out.emit(doc);
      return kYes;
    }

    if (tdcmd->parsed()) {
      odp_decomposition* raw = nullptr;
      check(odp_decomposition_heuristic(g.get(), parse_strategy(strategy), &raw));
      Decomposition d(raw);
      int valid = 0;
      check(odp_decomposition_validate(g.get(), d.get(), &valid, nullptr, 0, nullptr));
      json bags = json::array();
      for (std::size_t i = 0; i < odp_decomposition_node_count(d.get()); ++i) {
        std::size_t size = 0;
        const std::uint32_t* bag = odp_decomposition_bag(d.get(), i, &size);
        bags.push_back(std::vector<std::uint32_t>(bag, bag + size));
      }
      json tree = json::array();
      for (std::size_t i = 0; i < odp_decomposition_tree_edge_count(d.get()); ++i) {
        std::size_t a = 0;
        std::size_t b = 0;
        check(odp_decomposition_tree_edge(d.get(), i, &a, &b));
        tree.push_back({a, b});
      }
      if (!td_out.empty()) {
        std::size_t needed = 0;
        odp_decomposition_serialize(d.get(), nullptr, 0, &needed);
        std::string text(needed, '\0');
        check(odp_decomposition_serialize(d.get(), text.data(), text.size(), &needed));
        text.resize(needed - 1);
        std::ofstream file_out(td_out, std::ios::binary);
        if (!(file_out << text)) throw CliFailure{kUsage, "cannot write " + td_out};
      }
      doc["command"] = "td";
      doc["input"] = input_json(g.get());
      doc["strategy"] = strategy;
      doc["width"] = odp_decomposition_width(d.get());
      doc["valid"] = valid != 0;
      doc["lower_bound"] = odp_treewidth_lower_bound(g.get());
      doc["bags"] = bags;
      doc["tree_edges"] = tree;
      doc["stats"] = {{"millis", millis_since(start)}};
      out.emit(doc);
      return valid ? kYes : kInternal;
    }

    if (thm1->parsed()) {
      odp_theorem1_report report{};
      check(odp_verify_theorem1(g.get(), &oracle_options, &report));
      doc["command"] = "verify-thm1";
      doc["input"] = input_json(g.get());
      doc["answer"] = report.holds ? "yes" : "no";
      doc["threshold"] = report.threshold;
      doc["min_diameter"] = distance_json(report.min_diameter);
      doc["min_wiener"] = distance_json(report.min_wiener);
      doc["stats"] = {{"orientations_explored", report.orientations_explored}, {"millis", millis_since(start)}};
      out.emit(doc);
      return report.holds ? kYes : kNo;
    }
  } catch (const CliFailure& failure) {
    if (!out.quiet) std::cerr << "orientdp: " << failure.message << '\n';
    return failure.code;
  }
  return kUsage;
}
