#include "orientdp/orientdp.h"

#include <cstring>
#include <new>
#include <string>

#include "orientdp/dp_orient.hpp"
#include "orientdp/error.hpp"
#include "orientdp/graph.hpp"
#include "orientdp/oracle.hpp"
#include "orientdp/pipeline.hpp"
#include "orientdp/treewidth.hpp"

using namespace orientdp;

struct odp_graph {
  UndirectedGraph graph;
};

struct odp_decomposition {
  td::TreeDecomposition decomposition;
};

struct odp_oracle_result {
  Distance optimum;
  std::uint64_t explored = 0;
  bool has_witness = false;
  Orientation witness;
};

struct odp_route_report {
  pipeline::RouteReport report;
  std::string route;
};

struct odp_verdict {
  dp::Verdict verdict;
};

namespace {

thread_local std::string last_error;

odp_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return ODP_ERR_INVALID_ARGUMENT;
    case ErrorCode::Parse: return ODP_ERR_PARSE;
    case ErrorCode::CapExceeded: return ODP_ERR_CAP_EXCEEDED;
    case ErrorCode::NotConnected: return ODP_ERR_NOT_CONNECTED;
    case ErrorCode::InvalidDecomposition: return ODP_ERR_INVALID_DECOMPOSITION;
    case ErrorCode::NonPlanar: return ODP_ERR_NON_PLANAR;
    case ErrorCode::Internal: return ODP_ERR_INTERNAL;
  }
  return ODP_ERR_INTERNAL;
}

odp_status fail(odp_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

template <typename Fn>
odp_status guarded(Fn&& fn) {
  try {
    last_error.clear();
    return fn();
  } catch (const Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(ODP_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(ODP_ERR_INTERNAL, e.what());
  }
}

odp_distance to_c(Distance d) {
  return odp_distance{d.is_finite() ? d.value() : 0, d.is_infinite() ? 1 : 0};
}

odp_status write_text(const std::string& text, char* buffer, std::size_t capacity, std::size_t* needed) {
  if (needed) *needed = text.size() + 1;
  if (!buffer || capacity < text.size() + 1) {
    return fail(ODP_ERR_BUFFER_TOO_SMALL, "buffer needs " + std::to_string(text.size() + 1) + " bytes");
  }
  std::memcpy(buffer, text.c_str(), text.size() + 1);
  return ODP_OK;
}

const std::uint8_t* bits_of(const Orientation& o, std::size_t* bit_count) {
  static const std::uint8_t kEmpty = 0;
  if (bit_count) *bit_count = o.size();
  return o.size() == 0 ? &kEmpty : o.bits().data();
}

oracle::Options to_cpp(const odp_oracle_options* options) {
  oracle::Options o;
  if (options) {
    o.edge_cap = options->edge_cap;
    o.symmetry_halving = options->symmetry_halving != 0;
    o.prune_sources_sinks = options->prune_sources_sinks != 0;
    o.threads = options->threads;
  }
  return o;
}

td::Strategy to_cpp(odp_strategy s) {
  return s == ODP_MIN_FILL ? td::Strategy::MinFill : td::Strategy::MinDegree;
}

#define ODP_REQUIRE(cond)                                                  \
  do {                                                                     \
    if (!(cond)) return fail(ODP_ERR_INVALID_ARGUMENT, "null argument: " #cond); \
  } while (0)

}  // namespace

extern "C" {

const char* odp_version(void) { return "0.1.0"; }

const char* odp_status_string(odp_status status) {
  switch (status) {
    case ODP_OK: return "ok";
    case ODP_ERR_INVALID_ARGUMENT: return "invalid argument";
    case ODP_ERR_PARSE: return "parse error";
    case ODP_ERR_CAP_EXCEEDED: return "resource cap exceeded";
    case ODP_ERR_NOT_CONNECTED: return "graph not connected";
    case ODP_ERR_INVALID_DECOMPOSITION: return "invalid decomposition";
    case ODP_ERR_NON_PLANAR: return "graph not planar";
    case ODP_ERR_BUFFER_TOO_SMALL: return "buffer too small";
    case ODP_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* odp_last_error(void) { return last_error.c_str(); }

odp_status odp_graph_parse(const char* text, size_t length, odp_graph** out) {
  ODP_REQUIRE(out && (text || length == 0));
  return guarded([&] {
    *out = new odp_graph{parse_edge_list(std::string_view(text ? text : "", length))};
    return ODP_OK;
  });
}

odp_status odp_graph_generate(const char* family, uint32_t parameter, odp_graph** out) {
  ODP_REQUIRE(family && out);
  return guarded([&] {
    *out = new odp_graph{generate(parse_family(family), parameter)};
    return ODP_OK;
  });
}

odp_status odp_graph_from_edges(uint32_t n, const uint32_t* endpoints, size_t edge_count, odp_graph** out) {
  ODP_REQUIRE(out && (endpoints || edge_count == 0));
  return guarded([&] {
    std::vector<Edge> edges(edge_count);
    for (std::size_t i = 0; i < edge_count; ++i) edges[i] = {endpoints[2 * i], endpoints[2 * i + 1]};
    *out = new odp_graph{UndirectedGraph(n, std::move(edges))};
    return ODP_OK;
  });
}

void odp_graph_free(odp_graph* graph) { delete graph; }

size_t odp_graph_vertex_count(const odp_graph* graph) { return graph ? graph->graph.vertex_count() : 0; }
size_t odp_graph_edge_count(const odp_graph* graph) { return graph ? graph->graph.edge_count() : 0; }

odp_status odp_graph_edge(const odp_graph* graph, size_t i, uint32_t* u, uint32_t* v) {
  ODP_REQUIRE(graph && u && v);
  if (i >= graph->graph.edge_count()) return fail(ODP_ERR_INVALID_ARGUMENT, "edge index out of range");
  *u = graph->graph.edge(i).u;
  *v = graph->graph.edge(i).v;
  return ODP_OK;
}

odp_status odp_graph_serialize(const odp_graph* graph, char* buffer, size_t capacity, size_t* needed) {
  ODP_REQUIRE(graph);
  return guarded([&] { return write_text(serialize_edge_list(graph->graph), buffer, capacity, needed); });
}

odp_status odp_graph_contract_edge(const odp_graph* graph, size_t edge, odp_graph** out) {
  ODP_REQUIRE(graph && out);
  return guarded([&] {
    *out = new odp_graph{contract_edge(graph->graph, edge)};
    return ODP_OK;
  });
}

odp_status odp_graph_connectivity(const odp_graph* graph, int* connected, size_t* bridges, size_t capacity,
                                  size_t* bridge_count) {
  ODP_REQUIRE(graph && connected && bridge_count);
  return guarded([&] {
    const auto report = connectivity_report(graph->graph);
    *connected = report.connected ? 1 : 0;
    *bridge_count = report.bridges.size();
    if (report.bridges.size() > capacity || (!bridges && !report.bridges.empty())) {
      return fail(ODP_ERR_BUFFER_TOO_SMALL, "bridge buffer too small");
    }
    for (std::size_t i = 0; i < report.bridges.size(); ++i) bridges[i] = report.bridges[i];
    return ODP_OK;
  });
}

odp_status odp_graph_undirected_diameter(const odp_graph* graph, odp_distance* out) {
  ODP_REQUIRE(graph && out);
  return guarded([&] {
    *out = to_c(diameter(graph->graph));
    return ODP_OK;
  });
}

odp_status odp_orientation_measures(const odp_graph* graph, const uint8_t* bits, size_t bit_count,
                                    odp_distance* diameter_out, odp_distance* wiener_out) {
  ODP_REQUIRE(graph && (bits || bit_count == 0));
  return guarded([&] {
    const Orientation o(std::vector<std::uint8_t>(bits, bits + bit_count));
    const auto h = orient(graph->graph, o);
    if (diameter_out) *diameter_out = to_c(diameter(h));
    if (wiener_out) *wiener_out = to_c(wiener_index(h));
    return ODP_OK;
  });
}

odp_oracle_options odp_oracle_default_options(void) {
  const oracle::Options o;
  return odp_oracle_options{o.edge_cap, o.symmetry_halving ? 1 : 0, o.prune_sources_sinks ? 1 : 0, o.threads};
}

odp_status odp_oracle_min_diameter(const odp_graph* graph, const odp_oracle_options* options,
                                   odp_oracle_result** out) {
  ODP_REQUIRE(graph && out);
  return guarded([&] {
    auto r = oracle::min_diameter(graph->graph, to_cpp(options));
    *out = new odp_oracle_result{r.optimum, r.explored, true, std::move(r.witness)};
    return ODP_OK;
  });
}

odp_status odp_oracle_min_wiener(const odp_graph* graph, const odp_oracle_options* options,
                                 odp_oracle_result** out) {
  ODP_REQUIRE(graph && out);
  return guarded([&] {
    auto r = oracle::min_wiener(graph->graph, to_cpp(options));
    *out = new odp_oracle_result{r.optimum, r.explored, true, std::move(r.witness)};
    return ODP_OK;
  });
}

odp_status odp_oracle_decide_diameter(const odp_graph* graph, uint64_t l, const odp_oracle_options* options,
                                      odp_oracle_result** out) {
  ODP_REQUIRE(graph && out);
  return guarded([&] {
    auto d = oracle::decide_diameter(graph->graph, l, to_cpp(options));
    auto* r = new odp_oracle_result{d.feasible ? Distance(0) : Distance::infinity(), d.explored,
                                    d.witness.has_value(), d.witness.value_or(Orientation())};
    *out = r;
    return ODP_OK;
  });
}

void odp_oracle_result_free(odp_oracle_result* result) { delete result; }

odp_distance odp_oracle_result_optimum(const odp_oracle_result* result) {
  return result ? to_c(result->optimum) : odp_distance{0, 1};
}

uint64_t odp_oracle_result_explored(const odp_oracle_result* result) { return result ? result->explored : 0; }

const uint8_t* odp_oracle_result_witness(const odp_oracle_result* result, size_t* bit_count) {
  if (!result || !result->has_witness) {
    if (bit_count) *bit_count = 0;
    return nullptr;
  }
  return bits_of(result->witness, bit_count);
}

odp_status odp_decomposition_heuristic(const odp_graph* graph, odp_strategy strategy, odp_decomposition** out) {
  ODP_REQUIRE(graph && out);
  return guarded([&] {
    *out = new odp_decomposition{td::heuristic_decomposition(graph->graph, to_cpp(strategy))};
    return ODP_OK;
  });
}

odp_status odp_decomposition_parse(const char* text, size_t length, odp_decomposition** out) {
  ODP_REQUIRE(out && (text || length == 0));
  return guarded([&] {
    *out = new odp_decomposition{td::parse_decomposition(std::string_view(text ? text : "", length))};
    return ODP_OK;
  });
}

void odp_decomposition_free(odp_decomposition* decomposition) { delete decomposition; }

long odp_decomposition_width(const odp_decomposition* d) { return d ? d->decomposition.width() : -1; }

size_t odp_decomposition_node_count(const odp_decomposition* d) { return d ? d->decomposition.node_count() : 0; }

const uint32_t* odp_decomposition_bag(const odp_decomposition* d, size_t node, size_t* size) {
  if (!d || node >= d->decomposition.node_count()) {
    if (size) *size = 0;
    return nullptr;
  }
  const auto& bag = d->decomposition.bags[node];
  if (size) *size = bag.size();
  return bag.data();
}

size_t odp_decomposition_tree_edge_count(const odp_decomposition* d) {
  return d ? d->decomposition.tree_edges.size() : 0;
}

odp_status odp_decomposition_tree_edge(const odp_decomposition* d, size_t i, size_t* a, size_t* b) {
  ODP_REQUIRE(d && a && b);
  if (i >= d->decomposition.tree_edges.size()) return fail(ODP_ERR_INVALID_ARGUMENT, "tree edge out of range");
  *a = d->decomposition.tree_edges[i].first;
  *b = d->decomposition.tree_edges[i].second;
  return ODP_OK;
}

odp_status odp_decomposition_serialize(const odp_decomposition* d, char* buffer, size_t capacity,
                                       size_t* needed) {
  ODP_REQUIRE(d);
  return guarded([&] { return write_text(td::serialize_decomposition(d->decomposition), buffer, capacity, needed); });
}

odp_status odp_decomposition_validate(const odp_graph* graph, const odp_decomposition* d, int* valid,
                                      char* report, size_t capacity, size_t* needed) {
  ODP_REQUIRE(graph && d && valid);
  return guarded([&] {
    const auto r = td::validate_decomposition(graph->graph, d->decomposition);
    *valid = r.valid ? 1 : 0;
    std::string text;
    for (const auto& p : r.problems()) text += p + "\n";
    if (!report) {
      // Size query only.
      if (needed) *needed = text.size() + 1;
      return ODP_OK;
    }
    return write_text(text, report, capacity, needed);
  });
}

size_t odp_treewidth_lower_bound(const odp_graph* graph) {
  return graph ? td::treewidth_lower_bound(graph->graph) : 0;
}

odp_status odp_dp_decide(const odp_graph* graph, const odp_decomposition* d, uint64_t l, int want_witness,
                         int prune_dead, odp_verdict** out) {
  ODP_REQUIRE(graph && d && out);
  return guarded([&] {
    const auto nice = td::normalize_to_nice(d->decomposition, graph->graph);
    dp::Options options;
    options.want_witness = want_witness != 0;
    options.prune_dead = prune_dead != 0;
    *out = new odp_verdict{dp::dp_decide(graph->graph, nice, l, options)};
    return ODP_OK;
  });
}

void odp_verdict_free(odp_verdict* verdict) { delete verdict; }
int odp_verdict_feasible(const odp_verdict* v) { return v && v->verdict.feasible ? 1 : 0; }
size_t odp_verdict_peak_states(const odp_verdict* v) { return v ? v->verdict.stats.peak_states : 0; }

const uint8_t* odp_verdict_witness(const odp_verdict* v, size_t* bit_count) {
  if (!v || !v->verdict.witness) {
    if (bit_count) *bit_count = 0;
    return nullptr;
  }
  return bits_of(*v->verdict.witness, bit_count);
}

uint64_t odp_wiener_threshold(const odp_graph* graph) {
  return graph ? pipeline::wiener_threshold(graph->graph) : 0;
}

odp_status odp_verify_theorem1(const odp_graph* graph, const odp_oracle_options* options,
                               odp_theorem1_report* out) {
  ODP_REQUIRE(graph && out);
  return guarded([&] {
    const auto check = pipeline::check_theorem1(graph->graph, to_cpp(options));
    out->holds = check.holds ? 1 : 0;
    out->threshold = check.threshold;
    out->min_diameter = to_c(check.min_diameter.optimum);
    out->min_wiener = to_c(check.min_wiener.optimum);
    out->orientations_explored = check.min_diameter.explored + check.min_wiener.explored;
    return ODP_OK;
  });
}

odp_status odp_decide_orientation(const odp_graph* graph, uint64_t l, int assert_planar, odp_strategy strategy,
                                  odp_route_report** out) {
  ODP_REQUIRE(graph && out);
  return guarded([&] {
    pipeline::DecideOptions options;
    options.strategy = to_cpp(strategy);
    auto report = pipeline::decide_planar_orientation(graph->graph, l, assert_planar != 0, options);
    const std::string route(pipeline::route_name(report.route));
    *out = new odp_route_report{std::move(report), route};
    return ODP_OK;
  });
}

void odp_route_report_free(odp_route_report* report) { delete report; }

int odp_route_report_answer(const odp_route_report* r) {
  return r && r->report.answer == pipeline::Answer::Yes ? 1 : 0;
}

const char* odp_route_report_route(const odp_route_report* r) { return r ? r->route.c_str() : ""; }

long odp_route_report_width(const odp_route_report* r) {
  return r && r->report.width_used ? *r->report.width_used : -1;
}

uint64_t odp_route_report_threshold(const odp_route_report* r) { return r ? r->report.threshold : 0; }

size_t odp_route_report_peak_states(const odp_route_report* r) {
  return r && r->report.states_peak ? *r->report.states_peak : 0;
}

double odp_route_report_millis(const odp_route_report* r) { return r ? r->report.millis : 0.0; }

const uint8_t* odp_route_report_witness(const odp_route_report* r, size_t* bit_count) {
  if (!r || !r->report.witness) {
    if (bit_count) *bit_count = 0;
    return nullptr;
  }
  return bits_of(*r->report.witness, bit_count);
}

odp_status odp_minimize_diameter(const odp_graph* graph, uint64_t l_max, odp_distance* value, uint8_t* witness) {
  ODP_REQUIRE(graph && value);
  return guarded([&] {
    const auto result = pipeline::minimize_diameter(graph->graph, l_max);
    *value = to_c(result.value);
    if (witness && result.witness) {
      const auto bits = result.witness->bits();
      std::memcpy(witness, bits.data(), bits.size());
    }
    return ODP_OK;
  });
}

}  // extern "C"
