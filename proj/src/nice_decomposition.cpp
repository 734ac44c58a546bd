#include <algorithm>
#include <limits>

#include "orientdp/error.hpp"
#include "orientdp/treewidth.hpp"

namespace orientdp::td {

std::string_view nice_kind_name(NiceKind k) {
  switch (k) {
    case NiceKind::Leaf: return "leaf";
    case NiceKind::IntroduceVertex: return "introduce-vertex";
    case NiceKind::IntroduceEdge: return "introduce-edge";
    case NiceKind::Forget: return "forget";
    case NiceKind::Join: return "join";
  }
  return "?";
}

long NiceTreeDecomposition::width() const {
  long w = -1;
  for (const auto& node : nodes) w = std::max(w, static_cast<long>(node.bag.size()) - 1);
  return w;
}

namespace {

class NiceBuilder {
 public:
  explicit NiceBuilder(NiceTreeDecomposition& out) : out_(out) {}

  NodeId leaf() {
    NiceNode node;
    node.kind = NiceKind::Leaf;
    return push(std::move(node));
  }

  NodeId introduce_vertex(NodeId child, Vertex v) {
    NiceNode node;
    node.kind = NiceKind::IntroduceVertex;
    node.vertex = v;
    node.bag = out_.nodes[child].bag;
    node.bag.insert(std::upper_bound(node.bag.begin(), node.bag.end(), v), v);
    node.children = {child};
    return push(std::move(node));
  }

  NodeId forget(NodeId child, Vertex v) {
    NiceNode node;
    node.kind = NiceKind::Forget;
    node.vertex = v;
    node.bag = out_.nodes[child].bag;
    node.bag.erase(std::find(node.bag.begin(), node.bag.end(), v));
    node.children = {child};
    return push(std::move(node));
  }

  NodeId introduce_edge(NodeId child, EdgeIndex e) {
    NiceNode node;
    node.kind = NiceKind::IntroduceEdge;
    node.edge = e;
    node.bag = out_.nodes[child].bag;
    node.children = {child};
    const NodeId id = push(std::move(node));
    out_.edge_node[e] = id;
    return id;
  }

  NodeId join(NodeId left, NodeId right) {
    NiceNode node;
    node.kind = NiceKind::Join;
    node.bag = out_.nodes[left].bag;
    node.children = {left, right};
    return push(std::move(node));
  }

 private:
  NodeId push(NiceNode node) {
    out_.nodes.push_back(std::move(node));
    return out_.nodes.size() - 1;
  }

  NiceTreeDecomposition& out_;
};

}  // namespace

NiceTreeDecomposition normalize_to_nice(const TreeDecomposition& t, const UndirectedGraph& g) {
  const auto report = validate_decomposition(g, t);
  if (!report.valid) {
    const auto problems = report.problems();
    throw Error(ErrorCode::InvalidDecomposition,
                "invalid tree decomposition: " + (problems.empty() ? std::string("?") : problems.front()));
  }

  NiceTreeDecomposition nice;
  nice.edge_node.assign(g.edge_count(), std::numeric_limits<NodeId>::max());
  NiceBuilder build(nice);

  if (t.node_count() == 0) {
    build.leaf();
    return nice;
  }

  // Root at the first node holding the lowest-id vertex.
  NodeId root = 0;
  if (g.vertex_count() > 0) {
    for (NodeId i = 0; i < t.node_count(); ++i) {
      if (std::binary_search(t.bags[i].begin(), t.bags[i].end(), Vertex{0})) {
        root = i;
        break;
      }
    }
  }

  std::vector<std::vector<NodeId>> adjacency(t.node_count());
  for (const auto& [a, b] : t.tree_edges) {
    adjacency[a].push_back(b);
    adjacency[b].push_back(a);
  }
  for (auto& list : adjacency) std::sort(list.begin(), list.end());

  constexpr NodeId kNoParent = std::numeric_limits<NodeId>::max();
  std::vector<NodeId> parent(t.node_count(), kNoParent);
  std::vector<NodeId> bfs{root};
  std::vector<std::vector<NodeId>> children(t.node_count());
  parent[root] = root;
  for (std::size_t head = 0; head < bfs.size(); ++head) {
    const NodeId x = bfs[head];
    for (NodeId y : adjacency[x]) {
      if (parent[y] == kNoParent) {
        parent[y] = x;
        children[x].push_back(y);
        bfs.push_back(y);
      }
    }
  }

  // Top-down scan: the first node (closest to the root) whose bag holds both
  // endpoints introduces the edge.
  std::vector<std::vector<EdgeIndex>> edges_at(t.node_count());
  std::vector<char> assigned(g.edge_count(), 0);
  for (NodeId x : bfs) {
    const auto& bag = t.bags[x];
    for (std::size_t i = 0; i < bag.size(); ++i) {
      for (std::size_t j = i + 1; j < bag.size(); ++j) {
        const EdgeIndex e = g.find_edge(bag[i], bag[j]);
        if (e != g.edge_count() && !assigned[e]) {
          assigned[e] = 1;
          edges_at[x].push_back(e);
        }
      }
    }
    std::sort(edges_at[x].begin(), edges_at[x].end());
  }

  std::vector<NodeId> top(t.node_count());
  for (auto it = bfs.rbegin(); it != bfs.rend(); ++it) {
    const NodeId x = *it;
    const auto& bag = t.bags[x];
    std::vector<NodeId> branches;
    for (NodeId c : children[x]) {
      NodeId cur = top[c];
      const auto& child_bag = t.bags[c];
      for (Vertex v : child_bag) {
        if (!std::binary_search(bag.begin(), bag.end(), v)) cur = build.forget(cur, v);
      }
      for (Vertex v : bag) {
        if (!std::binary_search(child_bag.begin(), child_bag.end(), v)) cur = build.introduce_vertex(cur, v);
      }
      branches.push_back(cur);
    }
    if (branches.empty()) {
      NodeId cur = build.leaf();
      for (Vertex v : bag) cur = build.introduce_vertex(cur, v);
      branches.push_back(cur);
    }
    NodeId cur = branches.front();
    for (std::size_t i = 1; i < branches.size(); ++i) cur = build.join(cur, branches[i]);
    for (EdgeIndex e : edges_at[x]) cur = build.introduce_edge(cur, e);
    top[x] = cur;
  }

  NodeId cur = top[root];
  for (Vertex v : t.bags[root]) cur = build.forget(cur, v);
  return nice;
}

TreeDecomposition flatten(const NiceTreeDecomposition& nice) {
  TreeDecomposition t;
  t.bags.reserve(nice.nodes.size());
  for (NodeId i = 0; i < nice.nodes.size(); ++i) {
    t.bags.push_back(nice.nodes[i].bag);
    for (NodeId c : nice.nodes[i].children) t.tree_edges.emplace_back(c, i);
  }
  return t;
}

std::vector<std::string> check_nice(const NiceTreeDecomposition& nice, const UndirectedGraph& g) {
  std::vector<std::string> problems;
  auto complain = [&](NodeId i, const std::string& what) {
    problems.push_back("node " + std::to_string(i) + ": " + what);
  };
  if (nice.nodes.empty()) return {"no nodes"};
  if (!nice.nodes.back().bag.empty()) complain(nice.root(), "root bag is not empty");

  std::vector<std::size_t> introduced(g.edge_count(), 0);
  std::vector<std::size_t> parents(nice.nodes.size(), 0);
  for (NodeId i = 0; i < nice.nodes.size(); ++i) {
    const auto& node = nice.nodes[i];
    for (NodeId c : node.children) {
      if (c >= i) complain(i, "child does not precede its parent");
      else ++parents[c];
    }
    const std::vector<Vertex>* child_bag =
        node.children.empty() || node.children[0] >= i ? nullptr : &nice.nodes[node.children[0]].bag;
    switch (node.kind) {
      case NiceKind::Leaf:
        if (!node.children.empty()) complain(i, "leaf with children");
        if (!node.bag.empty()) complain(i, "leaf bag is not empty");
        break;
      case NiceKind::IntroduceVertex: {
        if (node.children.size() != 1 || !child_bag) { complain(i, "introduce needs one child"); break; }
        auto expect = *child_bag;
        if (std::binary_search(expect.begin(), expect.end(), node.vertex)) complain(i, "vertex already in bag");
        expect.insert(std::upper_bound(expect.begin(), expect.end(), node.vertex), node.vertex);
        if (expect != node.bag) complain(i, "introduce does not add exactly its vertex");
        break;
      }
      case NiceKind::Forget: {
        if (node.children.size() != 1 || !child_bag) { complain(i, "forget needs one child"); break; }
        auto expect = *child_bag;
        auto it = std::find(expect.begin(), expect.end(), node.vertex);
        if (it == expect.end()) { complain(i, "forgotten vertex not in child bag"); break; }
        expect.erase(it);
        if (expect != node.bag) complain(i, "forget does not remove exactly its vertex");
        break;
      }
      case NiceKind::IntroduceEdge: {
        if (node.children.size() != 1 || !child_bag) { complain(i, "introduce-edge needs one child"); break; }
        if (*child_bag != node.bag) complain(i, "introduce-edge changes the bag");
        if (node.edge >= g.edge_count()) { complain(i, "unknown edge"); break; }
        const auto& e = g.edge(node.edge);
        if (!std::binary_search(node.bag.begin(), node.bag.end(), e.u) ||
            !std::binary_search(node.bag.begin(), node.bag.end(), e.v)) {
          complain(i, "edge endpoints not in bag");
        }
        ++introduced[node.edge];
        if (nice.edge_node.size() != g.edge_count() || nice.edge_node[node.edge] != i) {
          complain(i, "edge map does not point here");
        }
        break;
      }
      case NiceKind::Join:
        if (node.children.size() != 2 || node.children[0] >= i || node.children[1] >= i) {
          complain(i, "join needs two earlier children");
          break;
        }
        if (nice.nodes[node.children[0]].bag != node.bag || nice.nodes[node.children[1]].bag != node.bag) {
          complain(i, "join children bags differ");
        }
        break;
    }
  }
  for (NodeId i = 0; i + 1 < nice.nodes.size(); ++i) {
    if (parents[i] != 1) complain(i, "node does not have exactly one parent");
  }
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    if (introduced[e] != 1) {
      problems.push_back("edge #" + std::to_string(e) + " introduced " + std::to_string(introduced[e]) + " times");
    }
  }
  const auto flat = validate_decomposition(g, flatten(nice));
  for (const auto& p : flat.problems()) problems.push_back("flattened: " + p);
  return problems;
}

}  // namespace orientdp::td
