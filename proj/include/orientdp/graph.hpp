#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace orientdp {

using Vertex = std::uint32_t;
using EdgeIndex = std::size_t;

/// A shortest-path length in N ∪ {∞}. Addition saturates at infinity.
class Distance {
 public:
  constexpr Distance() = default;
  constexpr explicit Distance(std::uint64_t v) : value_(v) {}

  static constexpr Distance infinity() {
    Distance d;
    d.value_ = kInfinite;
    return d;
  }

  constexpr bool is_infinite() const { return value_ == kInfinite; }
  constexpr bool is_finite() const { return value_ != kInfinite; }

  /// Only meaningful when finite.
  constexpr std::uint64_t value() const { return value_; }

  friend constexpr Distance operator+(Distance a, Distance b) {
    if (a.is_infinite() || b.is_infinite()) return infinity();
    return Distance(a.value_ + b.value_);
  }
  Distance& operator+=(Distance o) { return *this = *this + o; }

  friend constexpr auto operator<=>(Distance, Distance) = default;

  std::string to_string() const;

 private:
  static constexpr std::uint64_t kInfinite = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t value_ = 0;
};

struct Edge {
  Vertex u;
  Vertex v;

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1. Edges are stored with u < v and
/// sorted lexicographically; an edge's position in that list is its canonical
/// index, which every orientation and report refers to.
class UndirectedGraph {
 public:
  UndirectedGraph() = default;

  /// Canonicalizes `edges`: endpoints are ordered, duplicates collapse.
  /// Throws on loops or endpoints outside [0, n).
  UndirectedGraph(std::size_t n, std::vector<Edge> edges);

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }

  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(EdgeIndex i) const { return edges_.at(i); }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }

  bool has_edge(Vertex a, Vertex b) const;
  /// Canonical index of edge {a,b}, or edge_count() if absent.
  EdgeIndex find_edge(Vertex a, Vertex b) const;

  friend bool operator==(const UndirectedGraph& a, const UndirectedGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

/// One direction flag per canonical edge. Flag 0 runs the arc from the lesser
/// endpoint to the greater, flag 1 reverses it.
class Orientation {
 public:
  Orientation() = default;
  explicit Orientation(std::size_t m) : bits_(m, 0) {}
  explicit Orientation(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {}

  /// Low `m` bits of `mask`, bit i for edge i.
  static Orientation from_mask(std::uint64_t mask, std::size_t m);

  std::size_t size() const { return bits_.size(); }
  bool reversed(EdgeIndex i) const { return bits_.at(i) != 0; }
  void set(EdgeIndex i, bool reversed) { bits_.at(i) = reversed ? 1 : 0; }
  std::span<const std::uint8_t> bits() const { return bits_; }

  Orientation flipped() const;

  friend auto operator<=>(const Orientation&, const Orientation&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

class Digraph {
 public:
  explicit Digraph(std::size_t n = 0) : out_(n) {}

  /// Throws on loops, out-of-range endpoints, or a repeated arc.
  void add_arc(Vertex from, Vertex to);

  std::size_t vertex_count() const { return out_.size(); }
  std::size_t arc_count() const;
  std::span<const Vertex> out_neighbors(Vertex v) const { return out_.at(v); }
  bool has_arc(Vertex from, Vertex to) const;

  /// Every arc as (from, to), sorted.
  std::vector<std::pair<Vertex, Vertex>> arcs() const;

 private:
  std::vector<std::vector<Vertex>> out_;
};

class DistanceMatrix {
 public:
  explicit DistanceMatrix(std::size_t n = 0) : n_(n), d_(n * n, Distance::infinity()) {
    for (std::size_t v = 0; v < n; ++v) d_[v * n + v] = Distance(0);
  }

  std::size_t size() const { return n_; }
  Distance at(Vertex x, Vertex y) const { return d_[x * n_ + y]; }
  void set(Vertex x, Vertex y, Distance d) { d_[x * n_ + y] = d; }

  /// Max over x != y; 0 when n <= 1.
  Distance max_off_diagonal() const;
  /// Sum over x != y, infinite if any entry is.
  Distance sum_off_diagonal() const;

 private:
  std::size_t n_;
  std::vector<Distance> d_;
};

// Parsing and serialization of the edge-list text format.
UndirectedGraph parse_edge_list(std::istream& in);
UndirectedGraph parse_edge_list(std::string_view text);
std::string serialize_edge_list(const UndirectedGraph& g);

enum class Family { Path, Cycle, Complete, Grid, Book };

Family parse_family(std::string_view name);
std::string_view family_name(Family f);

/// path(p): p vertices in a line. cycle(p), complete(p): p >= 3.
/// grid(g): g x g lattice, vertex r*g+c. book(t): shared edge {0,1} plus
/// apexes 2..t+1 each joined to both 0 and 1.
UndirectedGraph generate(Family family, std::size_t p);

Digraph orient(const UndirectedGraph& g, const Orientation& o);
/// Both arcs for every edge.
Digraph symmetric_closure(const UndirectedGraph& g);

std::vector<Distance> sssp(const Digraph& h, Vertex s);
std::vector<Distance> sssp(const UndirectedGraph& g, Vertex s);

DistanceMatrix all_pairs(const Digraph& h);
DistanceMatrix all_pairs(const UndirectedGraph& g);

Distance diameter(const Digraph& h);
Distance diameter(const UndirectedGraph& g);
Distance wiener_index(const Digraph& h);

struct ConnectivityReport {
  bool connected = false;
  std::vector<EdgeIndex> bridges;  // canonical indices, ascending
};

ConnectivityReport connectivity_report(const UndirectedGraph& g);

/// Merges the endpoints of edge i into the lesser id. Ids above the removed
/// one shift down by one; loops and parallel edges are dropped.
UndirectedGraph contract_edge(const UndirectedGraph& g, EdgeIndex i);

/// Arcs of orient(g, o) as (from, to) pairs in canonical edge order.
std::vector<std::pair<Vertex, Vertex>> oriented_arcs(const UndirectedGraph& g,
                                                     const Orientation& o);

}  // namespace orientdp
