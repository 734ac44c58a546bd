#include "orientdp/treewidth.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <set>
#include <sstream>

#include "orientdp/error.hpp"

namespace orientdp::td {

long TreeDecomposition::width() const {
  long w = -1;
  for (const auto& bag : bags) w = std::max(w, static_cast<long>(bag.size()) - 1);
  return w;
}

std::vector<std::string> ValidationReport::problems() const {
  std::vector<std::string> out;
  if (!tree_problem.empty()) out.push_back(tree_problem);
  for (Vertex v : uncovered_vertices) out.push_back("vertex " + std::to_string(v) + " uncovered");
  for (EdgeIndex e : uncovered_edges) out.push_back("edge #" + std::to_string(e) + " uncovered");
  for (Vertex v : disconnected_vertices) {
    out.push_back("bags of vertex " + std::to_string(v) + " are disconnected in the tree");
  }
  return out;
}

namespace {

bool bag_contains(const std::vector<Vertex>& bag, Vertex v) {
  return std::binary_search(bag.begin(), bag.end(), v);
}

std::string check_tree(std::size_t nodes, const std::vector<std::pair<NodeId, NodeId>>& edges,
                       std::vector<std::vector<NodeId>>& adjacency) {
  adjacency.assign(nodes, {});
  for (const auto& [a, b] : edges) {
    if (a >= nodes || b >= nodes) return "tree edge refers to a missing node";
    if (a == b) return "tree edge is a loop";
    adjacency[a].push_back(b);
    adjacency[b].push_back(a);
  }
  if (nodes == 0) return edges.empty() ? "" : "tree edges without nodes";
  if (edges.size() != nodes - 1) return "tree has the wrong number of edges";
  std::vector<char> seen(nodes, 0);
  std::vector<NodeId> queue{0};
  seen[0] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (NodeId w : adjacency[queue[head]]) {
      if (!seen[w]) {
        seen[w] = 1;
        queue.push_back(w);
      }
    }
  }
  // n-1 edges plus connectivity implies acyclic.
  if (queue.size() != nodes) return "tree is not connected";
  return "";
}

}  // namespace

ValidationReport validate_decomposition(const UndirectedGraph& g, const TreeDecomposition& t) {
  ValidationReport report;
  const std::size_t n = g.vertex_count();
  const std::size_t nodes = t.node_count();

  std::vector<std::vector<NodeId>> adjacency;
  report.tree_problem = check_tree(nodes, t.tree_edges, adjacency);

  std::vector<std::vector<NodeId>> holders(n);
  for (NodeId i = 0; i < nodes; ++i) {
    const auto& bag = t.bags[i];
    if (!std::is_sorted(bag.begin(), bag.end()) ||
        std::adjacent_find(bag.begin(), bag.end()) != bag.end()) {
      if (report.tree_problem.empty()) report.tree_problem = "bag " + std::to_string(i) + " is not a sorted set";
      continue;
    }
    for (Vertex v : bag) {
      if (v >= n) {
        if (report.tree_problem.empty()) {
          report.tree_problem = "bag " + std::to_string(i) + " holds unknown vertex " + std::to_string(v);
        }
        continue;
      }
      holders[v].push_back(i);
    }
  }

  for (Vertex v = 0; v < n; ++v) {
    if (holders[v].empty()) report.uncovered_vertices.push_back(v);
  }

  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const auto& edge = g.edge(e);
    const bool covered = std::any_of(holders[edge.u].begin(), holders[edge.u].end(),
                                     [&](NodeId i) { return bag_contains(t.bags[i], edge.v); });
    if (!covered) report.uncovered_edges.push_back(e);
  }

  // Each vertex's holders must be connected through holder-only tree paths.
  std::vector<char> seen(nodes, 0);
  for (Vertex v = 0; v < n; ++v) {
    const auto& hs = holders[v];
    if (hs.size() < 2) continue;
    std::vector<NodeId> queue{hs.front()};
    seen[hs.front()] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (NodeId w : adjacency[queue[head]]) {
        if (!seen[w] && bag_contains(t.bags[w], v)) {
          seen[w] = 1;
          queue.push_back(w);
        }
      }
    }
    if (queue.size() != hs.size()) report.disconnected_vertices.push_back(v);
    for (NodeId w : queue) seen[w] = 0;
  }

  report.width = t.width();
  report.valid = report.tree_problem.empty() && report.uncovered_vertices.empty() &&
                 report.uncovered_edges.empty() && report.disconnected_vertices.empty();
  return report;
}

Strategy parse_strategy(std::string_view name) {
  if (name == "min-degree") return Strategy::MinDegree;
  if (name == "min-fill") return Strategy::MinFill;
  throw Error(ErrorCode::InvalidArgument, "unknown strategy '" + std::string(name) + "'");
}

std::string_view strategy_name(Strategy s) {
  return s == Strategy::MinDegree ? "min-degree" : "min-fill";
}

namespace {

class EliminationGraph {
 public:
  explicit EliminationGraph(const UndirectedGraph& g) : adj_(g.vertex_count()) {
    for (const auto& e : g.edges()) {
      adj_[e.u].insert(e.v);
      adj_[e.v].insert(e.u);
    }
  }

  const std::set<Vertex>& neighbors(Vertex v) const { return adj_[v]; }

  std::size_t fill(Vertex v) const {
    std::size_t missing = 0;
    const auto& nb = adj_[v];
    for (auto a = nb.begin(); a != nb.end(); ++a) {
      for (auto b = std::next(a); b != nb.end(); ++b) {
        if (!adj_[*a].contains(*b)) ++missing;
      }
    }
    return missing;
  }

  // Removes v after turning its neighbourhood into a clique. Returns the
  // vertices whose adjacency changed.
  std::vector<Vertex> eliminate(Vertex v) {
    std::vector<Vertex> nb(adj_[v].begin(), adj_[v].end());
    std::set<Vertex> touched(nb.begin(), nb.end());
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (adj_[nb[i]].insert(nb[j]).second) {
          adj_[nb[j]].insert(nb[i]);
          touched.insert(adj_[nb[i]].begin(), adj_[nb[i]].end());
          touched.insert(adj_[nb[j]].begin(), adj_[nb[j]].end());
        }
      }
    }
    for (Vertex w : nb) adj_[w].erase(v);
    adj_[v].clear();
    touched.erase(v);
    return {touched.begin(), touched.end()};
  }

 private:
  std::vector<std::set<Vertex>> adj_;
};

}  // namespace

std::vector<Vertex> elimination_order(const UndirectedGraph& g, Strategy strategy) {
  const std::size_t n = g.vertex_count();
  EliminationGraph eg(g);
  auto score = [&](Vertex v) {
    return strategy == Strategy::MinDegree ? eg.neighbors(v).size() : eg.fill(v);
  };
  std::vector<std::size_t> current(n);
  std::set<std::pair<std::size_t, Vertex>> queue;
  for (Vertex v = 0; v < n; ++v) {
    current[v] = score(v);
    queue.insert({current[v], v});
  }
  std::vector<Vertex> order;
  order.reserve(n);
  while (!queue.empty()) {
    const Vertex v = queue.begin()->second;
    queue.erase(queue.begin());
    order.push_back(v);
    for (Vertex w : eg.eliminate(v)) {
      queue.erase({current[w], w});
      current[w] = score(w);
      queue.insert({current[w], w});
    }
  }
  return order;
}

TreeDecomposition decomposition_from_order(const UndirectedGraph& g,
                                           const std::vector<Vertex>& order) {
  const std::size_t n = g.vertex_count();
  if (order.size() != n) throw Error(ErrorCode::InvalidArgument, "ordering must list every vertex");
  std::vector<std::size_t> position(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (order[i] >= n || position[order[i]] != n) {
      throw Error(ErrorCode::InvalidArgument, "ordering is not a permutation");
    }
    position[order[i]] = i;
  }

  TreeDecomposition t;
  t.bags.resize(n);
  EliminationGraph eg(g);
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex v = order[i];
    auto& bag = t.bags[i];
    bag.assign(eg.neighbors(v).begin(), eg.neighbors(v).end());
    bag.push_back(v);
    std::sort(bag.begin(), bag.end());

    std::size_t parent = n;
    for (Vertex w : eg.neighbors(v)) parent = std::min(parent, position[w]);
    if (parent != n) t.tree_edges.emplace_back(parent, i);
    eg.eliminate(v);
  }
  std::sort(t.tree_edges.begin(), t.tree_edges.end());
  return t;
}

TreeDecomposition heuristic_decomposition(const UndirectedGraph& g, Strategy strategy) {
  if (!connectivity_report(g).connected) {
    throw Error(ErrorCode::NotConnected, "tree decomposition requires a connected graph");
  }
  return decomposition_from_order(g, elimination_order(g, strategy));
}

std::size_t treewidth_lower_bound(const UndirectedGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> degree(n);
  std::set<std::pair<std::size_t, Vertex>> queue;
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = g.degree(v);
    queue.insert({degree[v], v});
  }
  std::vector<char> removed(n, 0);
  std::size_t best = 0;
  while (!queue.empty()) {
    const auto [d, v] = *queue.begin();
    queue.erase(queue.begin());
    best = std::max(best, d);
    removed[v] = 1;
    for (Vertex w : g.neighbors(v)) {
      if (removed[w]) continue;
      queue.erase({degree[w], w});
      --degree[w];
      queue.insert({degree[w], w});
    }
  }
  return best;
}

std::string serialize_decomposition(const TreeDecomposition& t) {
  std::ostringstream out;
  for (NodeId i = 0; i < t.node_count(); ++i) {
    out << "b " << i;
    for (Vertex v : t.bags[i]) out << ' ' << v;
    out << '\n';
  }
  for (const auto& [a, b] : t.tree_edges) out << "t " << a << ' ' << b << '\n';
  return out.str();
}

TreeDecomposition parse_decomposition(std::istream& in) {
  std::vector<std::pair<NodeId, std::vector<Vertex>>> bags;
  TreeDecomposition t;
  std::string line;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& what) {
    throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string tag;
    if (!(fields >> tag) || tag[0] == '#' || tag[0] == 'c') continue;
    long long a = 0;
    if (tag == "b") {
      if (!(fields >> a) || a < 0) fail("expected node id");
      std::vector<Vertex> bag;
      long long v = 0;
      while (fields >> v) {
        if (v < 0 || v > std::numeric_limits<Vertex>::max()) fail("bad vertex id");
        bag.push_back(static_cast<Vertex>(v));
      }
      if (!fields.eof()) fail("expected integer");
      std::sort(bag.begin(), bag.end());
      bags.emplace_back(static_cast<NodeId>(a), std::move(bag));
    } else if (tag == "t") {
      long long b = 0;
      std::string extra;
      if (!(fields >> a >> b) || a < 0 || b < 0 || (fields >> extra)) fail("expected two node ids");
      t.tree_edges.emplace_back(static_cast<NodeId>(a), static_cast<NodeId>(b));
    } else {
      fail("unknown line tag '" + tag + "'");
    }
  }
  t.bags.resize(bags.size());
  std::vector<char> seen(bags.size(), 0);
  for (auto& [id, bag] : bags) {
    if (id >= bags.size() || seen[id]) {
      throw Error(ErrorCode::Parse, "node ids must be 0..N-1, each used once");
    }
    seen[id] = 1;
    t.bags[id] = std::move(bag);
  }
  return t;
}

TreeDecomposition parse_decomposition(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_decomposition(in);
}

}  // namespace orientdp::td
