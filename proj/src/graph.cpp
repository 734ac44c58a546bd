#include "orientdp/graph.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <optional>
#include <sstream>

#include "orientdp/error.hpp"

namespace orientdp {

std::string Distance::to_string() const {
  return is_infinite() ? std::string("inf") : std::to_string(value_);
}

UndirectedGraph::UndirectedGraph(std::size_t n, std::vector<Edge> edges) : n_(n) {
  for (auto& e : edges) {
    if (e.u == e.v) {
      throw Error(ErrorCode::InvalidArgument, "loop at vertex " + std::to_string(e.u));
    }
    if (e.u >= n || e.v >= n) {
      throw Error(ErrorCode::InvalidArgument,
                  "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                      ") out of range for n=" + std::to_string(n));
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);

  adjacency_.assign(n_, {});
  for (const auto& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

bool UndirectedGraph::has_edge(Vertex a, Vertex b) const {
  return find_edge(a, b) != edge_count();
}

EdgeIndex UndirectedGraph::find_edge(Vertex a, Vertex b) const {
  if (a > b) std::swap(a, b);
  const Edge key{a, b};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return edges_.size();
  return static_cast<EdgeIndex>(it - edges_.begin());
}

Orientation Orientation::from_mask(std::uint64_t mask, std::size_t m) {
  Orientation o(m);
  for (std::size_t i = 0; i < m; ++i) o.bits_[i] = (mask >> i) & 1U;
  return o;
}

Orientation Orientation::flipped() const {
  Orientation o = *this;
  for (auto& b : o.bits_) b ^= 1U;
  return o;
}

void Digraph::add_arc(Vertex from, Vertex to) {
  if (from == to) throw Error(ErrorCode::InvalidArgument, "digraph loop");
  if (from >= out_.size() || to >= out_.size()) {
    throw Error(ErrorCode::InvalidArgument, "arc endpoint out of range");
  }
  if (has_arc(from, to)) throw Error(ErrorCode::InvalidArgument, "repeated arc");
  out_[from].push_back(to);
}

std::size_t Digraph::arc_count() const {
  std::size_t c = 0;
  for (const auto& l : out_) c += l.size();
  return c;
}

bool Digraph::has_arc(Vertex from, Vertex to) const {
  const auto& l = out_.at(from);
  return std::find(l.begin(), l.end(), to) != l.end();
}

std::vector<std::pair<Vertex, Vertex>> Digraph::arcs() const {
  std::vector<std::pair<Vertex, Vertex>> result;
  for (Vertex v = 0; v < out_.size(); ++v) {
    for (Vertex w : out_[v]) result.emplace_back(v, w);
  }
  std::sort(result.begin(), result.end());
  return result;
}

Distance DistanceMatrix::max_off_diagonal() const {
  Distance best(0);
  for (std::size_t x = 0; x < n_; ++x) {
    for (std::size_t y = 0; y < n_; ++y) {
      if (x != y) best = std::max(best, d_[x * n_ + y]);
    }
  }
  return best;
}

Distance DistanceMatrix::sum_off_diagonal() const {
  Distance total(0);
  for (std::size_t x = 0; x < n_; ++x) {
    for (std::size_t y = 0; y < n_; ++y) {
      if (x != y) total += d_[x * n_ + y];
    }
  }
  return total;
}

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

std::uint64_t parse_uint(std::string_view token, std::size_t line_no) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() ||
      value > std::numeric_limits<Vertex>::max()) {
    throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) +
                                      ": expected a nonnegative integer, got '" +
                                      std::string(token) + "'");
  }
  return value;
}

}  // namespace

UndirectedGraph parse_edge_list(std::istream& in) {
  std::vector<Edge> edges;
  std::optional<std::size_t> header_n;
  std::size_t max_id_plus_one = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = split_tokens(line);
    if (tokens.empty()) continue;
    if (tokens[0].front() == '#' || tokens[0].front() == 'c') continue;
    if (tokens[0] == "p") {
      // "p <n> <m>", also tolerating the DIMACS "p edge <n> <m>" spelling.
      std::size_t first = 1;
      if (tokens.size() == 4) first = 2;
      if (tokens.size() != first + 2) {
        throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) + ": malformed header");
      }
      if (header_n) {
        throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) + ": repeated header");
      }
      header_n = parse_uint(tokens[first], line_no);
      parse_uint(tokens[first + 1], line_no);
      continue;
    }
    if (tokens.size() != 2) {
      throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) +
                                        ": expected two vertex ids");
    }
    const auto u = static_cast<Vertex>(parse_uint(tokens[0], line_no));
    const auto v = static_cast<Vertex>(parse_uint(tokens[1], line_no));
    if (u == v) throw Error(ErrorCode::Parse, "loop at line " + std::to_string(line_no));
    if (header_n && std::max(u, v) >= *header_n) {
      throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) +
                                        ": vertex id exceeds header count");
    }
    max_id_plus_one = std::max<std::size_t>(max_id_plus_one, std::max(u, v) + std::size_t{1});
    edges.push_back({u, v});
  }
  return UndirectedGraph(header_n.value_or(max_id_plus_one), std::move(edges));
}

UndirectedGraph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

std::string serialize_edge_list(const UndirectedGraph& g) {
  std::string out = "p " + std::to_string(g.vertex_count()) + " " +
                    std::to_string(g.edge_count()) + "\n";
  for (const auto& e : g.edges()) {
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
    out += '\n';
  }
  return out;
}

Digraph orient(const UndirectedGraph& g, const Orientation& o) {
  if (o.size() != g.edge_count()) {
    throw Error(ErrorCode::InvalidArgument,
                "orientation has " + std::to_string(o.size()) + " bits, graph has " +
                    std::to_string(g.edge_count()) + " edges");
  }
  Digraph h(g.vertex_count());
  for (EdgeIndex i = 0; i < g.edge_count(); ++i) {
    const auto& e = g.edge(i);
    if (o.reversed(i)) {
      h.add_arc(e.v, e.u);
    } else {
      h.add_arc(e.u, e.v);
    }
  }
  return h;
}

std::vector<std::pair<Vertex, Vertex>> oriented_arcs(const UndirectedGraph& g,
                                                     const Orientation& o) {
  if (o.size() != g.edge_count()) {
    throw Error(ErrorCode::InvalidArgument, "orientation length mismatch");
  }
  std::vector<std::pair<Vertex, Vertex>> arcs;
  arcs.reserve(g.edge_count());
  for (EdgeIndex i = 0; i < g.edge_count(); ++i) {
    const auto& e = g.edge(i);
    arcs.push_back(o.reversed(i) ? std::pair{e.v, e.u} : std::pair{e.u, e.v});
  }
  return arcs;
}

Digraph symmetric_closure(const UndirectedGraph& g) {
  Digraph h(g.vertex_count());
  for (const auto& e : g.edges()) {
    h.add_arc(e.u, e.v);
    h.add_arc(e.v, e.u);
  }
  return h;
}

namespace {

template <typename Neighbors>
std::vector<Distance> bfs(std::size_t n, Vertex s, Neighbors&& neighbors) {
  if (s >= n) throw Error(ErrorCode::InvalidArgument, "source vertex out of range");
  std::vector<Distance> dist(n, Distance::infinity());
  std::vector<Vertex> queue;
  queue.reserve(n);
  dist[s] = Distance(0);
  queue.push_back(s);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex x = queue[head];
    for (Vertex y : neighbors(x)) {
      if (dist[y].is_infinite()) {
        dist[y] = Distance(dist[x].value() + 1);
        queue.push_back(y);
      }
    }
  }
  return dist;
}

template <typename Graph>
DistanceMatrix all_pairs_impl(const Graph& g) {
  const std::size_t n = g.vertex_count();
  DistanceMatrix m(n);
  for (Vertex s = 0; s < n; ++s) {
    auto row = sssp(g, s);
    for (Vertex t = 0; t < n; ++t) m.set(s, t, row[t]);
  }
  return m;
}

// Max over sources of the eccentricity, stopping at the first unreachable pair.
template <typename Graph>
Distance diameter_impl(const Graph& g) {
  Distance best(0);
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    for (const auto& d : sssp(g, s)) {
      if (d.is_infinite()) return Distance::infinity();
      best = std::max(best, d);
    }
  }
  return best;
}

}  // namespace

std::vector<Distance> sssp(const Digraph& h, Vertex s) {
  return bfs(h.vertex_count(), s, [&](Vertex v) { return h.out_neighbors(v); });
}

std::vector<Distance> sssp(const UndirectedGraph& g, Vertex s) {
  return bfs(g.vertex_count(), s, [&](Vertex v) { return g.neighbors(v); });
}

DistanceMatrix all_pairs(const Digraph& h) { return all_pairs_impl(h); }
DistanceMatrix all_pairs(const UndirectedGraph& g) { return all_pairs_impl(g); }

Distance diameter(const Digraph& h) { return diameter_impl(h); }
Distance diameter(const UndirectedGraph& g) { return diameter_impl(g); }

Distance wiener_index(const Digraph& h) {
  Distance total(0);
  for (Vertex s = 0; s < h.vertex_count(); ++s) {
    for (const auto& d : sssp(h, s)) {
      if (d.is_infinite()) return Distance::infinity();
      total += d;
    }
  }
  return total;
}

ConnectivityReport connectivity_report(const UndirectedGraph& g) {
  const std::size_t n = g.vertex_count();
  ConnectivityReport report;
  if (n == 0) {
    report.connected = true;
    return report;
  }

  // Iterative lowpoint DFS. Parent edges are tracked by index so that the
  // tree edge back to the parent is not mistaken for a back edge.
  constexpr std::size_t kUnvisited = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> order(n, kUnvisited);
  std::vector<std::size_t> low(n, 0);
  std::size_t counter = 0;
  std::size_t components = 0;

  struct Frame {
    Vertex v;
    EdgeIndex parent_edge;
    std::size_t next;
  };
  std::vector<Frame> stack;

  for (Vertex root = 0; root < n; ++root) {
    if (order[root] != kUnvisited) continue;
    ++components;
    order[root] = low[root] = counter++;
    stack.push_back({root, g.edge_count(), 0});
    while (!stack.empty()) {
      auto& f = stack.back();
      const auto nbrs = g.neighbors(f.v);
      if (f.next < nbrs.size()) {
        const Vertex w = nbrs[f.next++];
        const EdgeIndex e = g.find_edge(f.v, w);
        if (e == f.parent_edge) continue;
        if (order[w] == kUnvisited) {
          order[w] = low[w] = counter++;
          stack.push_back({w, e, 0});
        } else {
          low[f.v] = std::min(low[f.v], order[w]);
        }
        continue;
      }
      const Frame done = f;
      stack.pop_back();
      if (!stack.empty()) {
        auto& parent = stack.back();
        low[parent.v] = std::min(low[parent.v], low[done.v]);
        if (low[done.v] > order[parent.v]) report.bridges.push_back(done.parent_edge);
      }
    }
  }
  report.connected = components == 1;
  std::sort(report.bridges.begin(), report.bridges.end());
  return report;
}

UndirectedGraph contract_edge(const UndirectedGraph& g, EdgeIndex i) {
  if (i >= g.edge_count()) {
    throw Error(ErrorCode::InvalidArgument, "edge index " + std::to_string(i) + " out of range");
  }
  const Vertex keep = g.edge(i).u;
  const Vertex gone = g.edge(i).v;
  auto relabel = [&](Vertex x) -> Vertex {
    if (x == gone) return keep;
    return x > gone ? x - 1 : x;
  };
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (const auto& e : g.edges()) {
    const Vertex a = relabel(e.u);
    const Vertex b = relabel(e.v);
    if (a != b) edges.push_back({a, b});
  }
  return UndirectedGraph(g.vertex_count() - 1, std::move(edges));
}

}  // namespace orientdp
