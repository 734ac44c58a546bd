#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "orientdp/graph.hpp"

namespace orientdp::td {

using NodeId = std::size_t;

/// Tree of vertex bags. Bags are kept sorted.
struct TreeDecomposition {
  std::vector<std::vector<Vertex>> bags;
  std::vector<std::pair<NodeId, NodeId>> tree_edges;

  std::size_t node_count() const { return bags.size(); }
  /// max |bag| - 1, or -1 for a decomposition without bags.
  long width() const;
};

struct ValidationReport {
  bool valid = false;
  long width = -1;
  std::string tree_problem;  // empty when the tree is acyclic and connected
  std::vector<Vertex> uncovered_vertices;
  std::vector<EdgeIndex> uncovered_edges;
  std::vector<Vertex> disconnected_vertices;  // bag set is not a subtree

  /// Human-readable list of every violation.
  std::vector<std::string> problems() const;
};

ValidationReport validate_decomposition(const UndirectedGraph& g, const TreeDecomposition& t);

enum class Strategy { MinDegree, MinFill };

Strategy parse_strategy(std::string_view name);
std::string_view strategy_name(Strategy s);

/// Greedy elimination ordering, ties broken by lowest vertex id.
std::vector<Vertex> elimination_order(const UndirectedGraph& g, Strategy strategy);

/// One bag per eliminated vertex: the vertex plus its later neighbours in the
/// fill-in graph. Node i belongs to the i-th eliminated vertex; its parent is
/// the bag of the earliest-eliminated among those neighbours.
TreeDecomposition decomposition_from_order(const UndirectedGraph& g,
                                           const std::vector<Vertex>& order);

/// Throws NotConnected for disconnected input.
TreeDecomposition heuristic_decomposition(const UndirectedGraph& g, Strategy strategy);

/// Degeneracy of g, a lower bound on its treewidth.
std::size_t treewidth_lower_bound(const UndirectedGraph& g);

enum class NiceKind { Leaf, IntroduceVertex, IntroduceEdge, Forget, Join };

std::string_view nice_kind_name(NiceKind k);

struct NiceNode {
  NiceKind kind = NiceKind::Leaf;
  std::vector<Vertex> bag;  // sorted
  Vertex vertex = 0;        // IntroduceVertex / Forget
  EdgeIndex edge = 0;       // IntroduceEdge
  std::vector<NodeId> children;
};

/// Rooted nice decomposition. Children always precede their parent in
/// `nodes`, and the root is the last node; its bag is empty.
struct NiceTreeDecomposition {
  std::vector<NiceNode> nodes;
  std::vector<NodeId> edge_node;  // canonical edge index -> IntroduceEdge node

  NodeId root() const { return nodes.size() - 1; }
  long width() const;
};

/// Throws InvalidDecomposition if `t` is not valid for `g`.
NiceTreeDecomposition normalize_to_nice(const TreeDecomposition& t, const UndirectedGraph& g);

/// Bags and parent links of the nice form as a plain decomposition.
TreeDecomposition flatten(const NiceTreeDecomposition& nice);

/// Every structural rule of the nice form; empty when it holds.
std::vector<std::string> check_nice(const NiceTreeDecomposition& nice, const UndirectedGraph& g);

// "b <id> v1 v2 ..." per node, "t <a> <b>" per tree edge.
std::string serialize_decomposition(const TreeDecomposition& t);
TreeDecomposition parse_decomposition(std::istream& in);
TreeDecomposition parse_decomposition(std::string_view text);

}  // namespace orientdp::td
