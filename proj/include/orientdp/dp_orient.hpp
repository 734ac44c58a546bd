#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orientdp/graph.hpp"
#include "orientdp/treewidth.hpp"

namespace orientdp::dp {

/// A distance in {0, ..., l, top}; top stands for anything above l.
using Cap = std::uint8_t;

inline constexpr std::uint64_t kMaxBound = 250;

class CapDomain {
 public:
  explicit CapDomain(std::uint64_t l);

  std::uint64_t bound() const { return l_; }
  Cap top() const { return top_; }
  Cap add(Cap a, Cap b) const {
    const unsigned s = unsigned{a} + unsigned{b};
    return s >= top_ ? top_ : static_cast<Cap>(s);
  }
  bool within(Cap c) const { return c < top_; }

 private:
  std::uint64_t l_;
  Cap top_;
};

/// Capped distances between one forgotten vertex and each bag vertex, in bag
/// order. Out-profiles hold distances from the forgotten vertex, in-profiles
/// distances to it.
using Profile = std::vector<Cap>;

struct ProfilePair {
  Profile out;
  Profile in;

  friend auto operator<=>(const ProfilePair&, const ProfilePair&) = default;
};

/// DP configuration at one nice-decomposition node.
///
/// `dist` is the |bag| x |bag| matrix of capped directed distances inside the
/// oriented subgraph processed so far. `out_profiles` / `in_profiles` are the
/// distinct profiles of forgotten vertices, and `pairs` records every ordered
/// pair of forgotten vertices whose distance is still above l as the pair
/// (out-profile of the source, in-profile of the target). Every profile is
/// kept relaxed through `dist`, and all three collections are sorted sets.
struct DPState {
  std::vector<Vertex> bag;
  std::vector<Cap> dist;
  std::vector<Profile> out_profiles;
  std::vector<Profile> in_profiles;
  std::vector<ProfilePair> pairs;

  std::size_t width() const { return bag.size(); }
  Cap at(std::size_t i, std::size_t j) const { return dist[i * bag.size() + j]; }
  Cap& at(std::size_t i, std::size_t j) { return dist[i * bag.size() + j]; }

  /// Sorts and deduplicates the profile sets and the pair set.
  void canonicalize();
  /// Byte key identifying the state within one node's table.
  std::string encode() const;

  friend auto operator<=>(const DPState&, const DPState&) = default;
};

/// State transitions for a fixed diameter bound l.
class Transitions {
 public:
  explicit Transitions(std::uint64_t l) : cap_(l) {}

  const CapDomain& domain() const { return cap_; }

  DPState leaf() const;
  DPState introduce_vertex(const DPState& s, Vertex v) const;
  /// Adds the arc from -> to; both endpoints must be in the bag.
  DPState introduce_arc(const DPState& s, Vertex from, Vertex to) const;
  /// Both orientations of edge {a, b}; element i corresponds to orientation
  /// bit i (0: lesser endpoint to greater).
  std::array<DPState, 2> introduce_edge(const DPState& s, Vertex a, Vertex b) const;
  DPState forget(const DPState& s, Vertex v) const;
  DPState join(const DPState& left, const DPState& right) const;
  bool root_accept(const DPState& s) const;

  /// True when some obligation can no longer be met by arcs introduced later.
  bool is_dead(const DPState& s) const;

  /// Whether out-profile `out` already reaches in-profile `in` within l.
  bool satisfied(const Profile& out, const Profile& in) const;

 private:
  void close(DPState& s) const;
  void relax_all(DPState& s) const;
  Profile relax_out(const DPState& s, const Profile& p) const;
  Profile relax_in(const DPState& s, const Profile& p) const;
  bool all_top(const Profile& p) const;

  CapDomain cap_;
};

struct Options {
  bool want_witness = false;
  /// Drop dead states after every transition.
  bool prune_dead = false;
  /// Answer infeasible immediately when the graph has a bridge.
  bool bridge_precheck = true;
};

struct Stats {
  std::vector<std::size_t> states_per_node;
  std::size_t peak_states = 0;
  std::size_t total_states = 0;
};

struct Verdict {
  bool feasible = false;
  std::optional<Orientation> witness;
  Stats stats;
};

/// Decides whether g has an orientation of diameter at most l by dynamic
/// programming over `nice`. Throws NotConnected for disconnected g and
/// InvalidDecomposition when `nice` does not fit g.
Verdict dp_decide(const UndirectedGraph& g, const td::NiceTreeDecomposition& nice,
                  std::uint64_t l, const Options& options = {});

/// log2 of a coarse per-node ceiling on distinct states for bags of width k.
double state_count_log2_ceiling(std::size_t k, std::uint64_t l);

}  // namespace orientdp::dp
