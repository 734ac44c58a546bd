#pragma once

#include <cstdint>
#include <optional>

#include "orientdp/graph.hpp"

namespace orientdp::oracle {

inline constexpr std::size_t kDefaultEdgeCap = 26;
// Bitmask evaluation packs vertex sets and orientations into 64-bit words.
inline constexpr std::size_t kHardEdgeCap = 62;

struct Options {
  std::size_t edge_cap = kDefaultEdgeCap;
  /// Fix edge 0 low-to-high; reversing every arc preserves both measures.
  bool symmetry_halving = true;
  /// Skip orientations that leave some vertex without an in-arc or an out-arc.
  bool prune_sources_sinks = true;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 1;
};

struct Result {
  Distance optimum = Distance::infinity();
  Orientation witness;
  std::uint64_t explored = 0;
};

struct Decision {
  bool feasible = false;
  std::optional<Orientation> witness;
  std::uint64_t explored = 0;
};

/// Minimum directed diameter over all 2^m orientations. The witness is the
/// first optimal orientation in increasing mask order (bit i = edge i).
Result min_diameter(const UndirectedGraph& g, const Options& options = {});

/// Minimum Wiener index over all orientations, same witness convention.
Result min_wiener(const UndirectedGraph& g, const Options& options = {});

/// Stops at the first orientation (in mask order) with diameter <= l.
Decision decide_diameter(const UndirectedGraph& g, std::uint64_t l,
                         const Options& options = {});

}  // namespace orientdp::oracle
