#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "orientdp/dp_orient.hpp"
#include "orientdp/graph.hpp"
#include "orientdp/oracle.hpp"
#include "orientdp/treewidth.hpp"

namespace orientdp::pipeline {

/// 2(n^2 - n) - m: the Wiener index of any diameter-2 orientation, and a
/// strict lower bound for every orientation of larger diameter.
std::uint64_t wiener_threshold(const UndirectedGraph& g);

struct WienerInstance {
  UndirectedGraph graph;
  std::uint64_t threshold = 0;
};

WienerInstance reduce_diam2_to_wiener(const UndirectedGraph& g);

struct Theorem1Check {
  bool holds = false;
  std::uint64_t threshold = 0;
  oracle::Result min_diameter;
  oracle::Result min_wiener;
};

/// Checks with the oracle that "diameter <= 2 is achievable" coincides with
/// "Wiener index <= threshold is achievable", and that the minimum Wiener
/// index equals the threshold exactly whenever diameter 2 is achievable.
Theorem1Check check_theorem1(const UndirectedGraph& g, const oracle::Options& options = {});
bool verify_theorem1(const UndirectedGraph& g, const oracle::Options& options = {});

/// Width above which planar inputs cannot have an orientation of diameter <= l.
constexpr std::uint64_t planar_width_threshold(std::uint64_t l) { return 12 * l + 13; }

enum class Answer { Yes, No };

enum class Route {
  Disconnected,
  Bridge,
  UndirectedDiameter,
  Dp,
  TreewidthBound,
  OracleFallback,  // reserved; the pipeline itself never falls back
};

std::string_view route_name(Route r);

struct RouteReport {
  Answer answer = Answer::No;
  Route route = Route::Disconnected;
  std::optional<Orientation> witness;
  std::optional<long> width_used;
  std::optional<std::size_t> states_peak;
  std::uint64_t threshold = 0;
  double millis = 0.0;
};

struct DecideOptions {
  td::Strategy strategy = td::Strategy::MinDegree;
  bool prune_dead = true;
};

/// The width-2 negative shortcut: only when the caller vouches for planarity
/// and the certified lower bound, not the heuristic width, exceeds the
/// threshold.
bool treewidth_shortcut_applies(long heuristic_width, std::size_t lower_bound,
                                std::uint64_t l, bool assert_planar);

/// Decides whether g can be oriented with diameter <= l. Throws NonPlanar
/// when `assert_planar` is set and m > 3n - 6.
RouteReport decide_planar_orientation(const UndirectedGraph& g, std::uint64_t l,
                                      bool assert_planar, const DecideOptions& options = {});

struct MinimizeResult {
  Distance value = Distance::infinity();  // infinite: nothing <= l_max
  std::optional<Orientation> witness;
};

MinimizeResult minimize_diameter(const UndirectedGraph& g, std::uint64_t l_max,
                                 const DecideOptions& options = {});

}  // namespace orientdp::pipeline
