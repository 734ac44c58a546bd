#pragma once

// Test-only helpers. Nothing here calls into the solver paths it is used to
// check: graphs are enumerated directly, treewidth comes from trying every
// elimination ordering, and distances from a Floyd-Warshall pass over an
// adjacency matrix.

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "orientdp/graph.hpp"

namespace orientdp::testing {

/// Every labeled simple graph on n vertices (2^(n choose 2) of them).
std::vector<UndirectedGraph> all_labeled_graphs(std::size_t n);

/// One representative per isomorphism class on n vertices (n <= 7).
std::vector<UndirectedGraph> all_unlabeled_graphs(std::size_t n);

UndirectedGraph random_graph(std::mt19937_64& rng, std::size_t n, double p);
UndirectedGraph random_connected_graph(std::mt19937_64& rng, std::size_t n, double extra_p);

/// Applies vertex permutation `perm` (old id -> new id).
UndirectedGraph relabel(const UndirectedGraph& g, const std::vector<Vertex>& perm);

/// Exact treewidth: minimum over all n! elimination orderings (n <= 8).
std::size_t exact_treewidth(const UndirectedGraph& g);

/// Diameter and Wiener index of the digraph with arcs `arcs`, from a
/// Floyd-Warshall all-pairs matrix. Infinite values come back as nullopt-like
/// flags.
struct MatrixMeasures {
  bool strongly_connected = false;
  std::uint64_t diameter = 0;
  std::uint64_t wiener = 0;
};
MatrixMeasures floyd_warshall_measures(std::size_t n,
                                       const std::vector<std::pair<Vertex, Vertex>>& arcs);

/// Undirected diameter by Floyd-Warshall; UINT64_MAX when disconnected.
std::uint64_t matrix_undirected_diameter(const UndirectedGraph& g);

bool is_connected_bridgeless(const UndirectedGraph& g);

}  // namespace orientdp::testing
