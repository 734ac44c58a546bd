#include "orientdp/pipeline.hpp"

#include <chrono>

#include "orientdp/error.hpp"

namespace orientdp::pipeline {

std::uint64_t wiener_threshold(const UndirectedGraph& g) {
  const std::uint64_t n = g.vertex_count();
  return 2 * (n * n - n) - g.edge_count();
}

WienerInstance reduce_diam2_to_wiener(const UndirectedGraph& g) {
  return WienerInstance{g, wiener_threshold(g)};
}

Theorem1Check check_theorem1(const UndirectedGraph& g, const oracle::Options& options) {
  Theorem1Check check;
  check.threshold = wiener_threshold(g);
  check.min_diameter = oracle::min_diameter(g, options);
  check.min_wiener = oracle::min_wiener(g, options);
  const Distance k(check.threshold);
  const bool diameter_side = check.min_diameter.optimum <= Distance(2);
  const bool wiener_side = check.min_wiener.optimum <= k;
  check.holds = diameter_side == wiener_side;
  if (diameter_side) check.holds = check.holds && check.min_wiener.optimum == k;
  return check;
}

bool verify_theorem1(const UndirectedGraph& g, const oracle::Options& options) {
  return check_theorem1(g, options).holds;
}

std::string_view route_name(Route r) {
  switch (r) {
    case Route::Disconnected: return "disconnected";
    case Route::Bridge: return "bridge";
    case Route::UndirectedDiameter: return "undirected-diameter";
    case Route::Dp: return "dp";
    case Route::TreewidthBound: return "treewidth-bound";
    case Route::OracleFallback: return "oracle-fallback";
  }
  return "?";
}

bool treewidth_shortcut_applies(long heuristic_width, std::size_t lower_bound, std::uint64_t l,
                                bool assert_planar) {
  const auto threshold = planar_width_threshold(l);
  return assert_planar && heuristic_width > static_cast<long>(threshold) && lower_bound > threshold;
}

namespace {

void check_bound(std::uint64_t l) {
  if (l < 1 || l > dp::kMaxBound) {
    throw Error(ErrorCode::InvalidArgument,
                "diameter bound must lie in [1, " + std::to_string(dp::kMaxBound) + "]");
  }
}

void verify_witness(const UndirectedGraph& g, const Orientation& o, std::uint64_t l) {
  if (diameter(orient(g, o)) > Distance(l)) {
    throw Error(ErrorCode::Internal, "witness orientation does not achieve diameter <= " + std::to_string(l));
  }
}

}  // namespace

RouteReport decide_planar_orientation(const UndirectedGraph& g, std::uint64_t l, bool assert_planar,
                                      const DecideOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  check_bound(l);
  const std::size_t n = g.vertex_count();
  if (assert_planar && n >= 3 && g.edge_count() > 3 * n - 6) {
    throw Error(ErrorCode::NonPlanar, "graph has " + std::to_string(g.edge_count()) +
                                          " edges, more than 3n-6 = " + std::to_string(3 * n - 6));
  }

  RouteReport report;
  report.threshold = planar_width_threshold(l);
  auto finish = [&](Answer a, Route r) {
    report.answer = a;
    report.route = r;
    report.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
  };

  const auto conn = connectivity_report(g);
  if (!conn.connected) return finish(Answer::No, Route::Disconnected);
  if (!conn.bridges.empty()) return finish(Answer::No, Route::Bridge);
  if (diameter(g) > Distance(l)) return finish(Answer::No, Route::UndirectedDiameter);

  const auto decomposition = td::heuristic_decomposition(g, options.strategy);
  report.width_used = decomposition.width();
  if (decomposition.width() > static_cast<long>(report.threshold) &&
      treewidth_shortcut_applies(decomposition.width(), td::treewidth_lower_bound(g), l, assert_planar)) {
    return finish(Answer::No, Route::TreewidthBound);
  }

  // Within the threshold, or above it without a certificate: the DP is exact
  // at any width.
  const auto nice = td::normalize_to_nice(decomposition, g);
  dp::Options dp_options;
  dp_options.want_witness = true;
  dp_options.prune_dead = options.prune_dead;
  auto verdict = dp::dp_decide(g, nice, l, dp_options);
  report.states_peak = verdict.stats.peak_states;
  if (verdict.feasible) {
    verify_witness(g, *verdict.witness, l);
    report.witness = std::move(verdict.witness);
    return finish(Answer::Yes, Route::Dp);
  }
  return finish(Answer::No, Route::Dp);
}

MinimizeResult minimize_diameter(const UndirectedGraph& g, std::uint64_t l_max,
                                 const DecideOptions& options) {
  check_bound(l_max);
  MinimizeResult result;
  const auto conn = connectivity_report(g);
  if (!conn.connected || !conn.bridges.empty()) return result;

  const Distance undirected = diameter(g);
  if (undirected > Distance(l_max)) return result;
  if (g.vertex_count() <= 1) {
    result.value = Distance(0);
    result.witness = Orientation(g.edge_count());
    return result;
  }

  const auto nice = td::normalize_to_nice(td::heuristic_decomposition(g, options.strategy), g);
  dp::Options dp_options;
  dp_options.want_witness = true;
  dp_options.prune_dead = options.prune_dead;
  // Every directed distance dominates the undirected one.
  for (std::uint64_t l = std::max<std::uint64_t>(1, undirected.value()); l <= l_max; ++l) {
    auto verdict = dp::dp_decide(g, nice, l, dp_options);
    if (verdict.feasible) {
      verify_witness(g, *verdict.witness, l);
      result.value = Distance(l);
      result.witness = std::move(verdict.witness);
      return result;
    }
  }
  return result;
}

}  // namespace orientdp::pipeline
