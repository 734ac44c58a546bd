#include <random>
#include <sstream>

#include "doctest.h"
#include "orientdp/error.hpp"
#include "orientdp/graph.hpp"
#include "test_support.hpp"

using namespace orientdp;
namespace t = orientdp::testing;

namespace {

std::vector<std::pair<Vertex, Vertex>> arcs_of(const Digraph& h) { return h.arcs(); }

Digraph directed_cycle(std::size_t n) {
  Digraph h(n);
  for (Vertex v = 0; v < n; ++v) h.add_arc(v, static_cast<Vertex>((v + 1) % n));
  return h;
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an orientdp::Error");
  return ErrorCode::Internal;
}

}  // namespace

TEST_SUITE("graph") {

TEST_CASE("parse edge lists") {
  const auto g = parse_edge_list("0 1\n1 2");
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.edge(0) == Edge{0, 1});
  CHECK(g.edge(1) == Edge{1, 2});

  const auto dup = parse_edge_list("1 0\n0 1");
  CHECK(dup.vertex_count() == 2);
  CHECK(dup.edge_count() == 1);

  try {
    parse_edge_list("0 0");
    FAIL("loop accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Parse);
    CHECK(std::string(e.what()) == "loop at line 1");
  }
}

TEST_CASE("parse header, comments and bad tokens") {
  const auto g = parse_edge_list("c hello\n# another\np 5 1\n\n3 1\n");
  CHECK(g.vertex_count() == 5);
  CHECK(g.edge_count() == 1);
  CHECK(g.edge(0) == Edge{1, 3});

  CHECK(code_of([] { parse_edge_list("0 x"); }) == ErrorCode::Parse);
  CHECK(code_of([] { parse_edge_list("0 -1"); }) == ErrorCode::Parse);
  CHECK(code_of([] { parse_edge_list("p 2 1\n0 2"); }) == ErrorCode::Parse);
  CHECK(code_of([] { parse_edge_list("0 1 2"); }) == ErrorCode::Parse);
}

TEST_CASE("serialization round-trips bit-exactly") {
  const auto g = generate(Family::Book, 3);
  const auto text = serialize_edge_list(g);
  const auto back = parse_edge_list(text);
  CHECK(back == g);
  CHECK(serialize_edge_list(back) == text);
  CHECK(text.rfind("p 5 7\n", 0) == 0);
}

TEST_CASE("generator sizes") {
  const auto grid = generate(Family::Grid, 3);
  CHECK(grid.vertex_count() == 9);
  CHECK(grid.edge_count() == 12);
  const auto book = generate(Family::Book, 2);
  CHECK(book.vertex_count() == 4);
  CHECK(book.edge_count() == 5);
  const auto k4 = generate(Family::Complete, 4);
  CHECK(k4.vertex_count() == 4);
  CHECK(k4.edge_count() == 6);

  for (std::size_t g = 1; g <= 6; ++g) CHECK(generate(Family::Grid, g).edge_count() == 2 * g * (g - 1));
  for (std::size_t k = 1; k <= 9; ++k) {
    const auto b = generate(Family::Book, k);
    CHECK(b.vertex_count() == k + 2);
    CHECK(b.edge_count() == 2 * k + 1);
  }
  CHECK(generate(Family::Path, 1).edge_count() == 0);
  CHECK(code_of([] { generate(Family::Cycle, 2); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { generate(Family::Complete, 2); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { generate(Family::Path, 0); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { parse_family("wheel"); }) == ErrorCode::InvalidArgument);
  CHECK(parse_family("book") == Family::Book);
}

TEST_CASE("orientation bit convention") {
  const auto c3 = generate(Family::Cycle, 3);
  using A = std::vector<std::pair<Vertex, Vertex>>;
  CHECK(arcs_of(orient(c3, Orientation(std::vector<std::uint8_t>{0, 0, 0}))) == A{{0, 1}, {0, 2}, {1, 2}});
  CHECK(arcs_of(orient(c3, Orientation(std::vector<std::uint8_t>{0, 1, 0}))) == A{{0, 1}, {1, 2}, {2, 0}});
  CHECK(arcs_of(orient(generate(Family::Path, 2), Orientation(std::vector<std::uint8_t>{1}))) == A{{1, 0}});
  CHECK(code_of([&] { orient(c3, Orientation(2)); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("sssp") {
  const auto c3 = directed_cycle(3);
  CHECK(sssp(c3, 0) == std::vector<Distance>{Distance(0), Distance(1), Distance(2)});

  const auto grid = generate(Family::Grid, 3);
  const auto d = sssp(grid, 0);
  CHECK(*std::max_element(d.begin(), d.end()) == Distance(4));

  Digraph h(2);
  h.add_arc(0, 1);
  CHECK(sssp(h, 1) == std::vector<Distance>{Distance::infinity(), Distance(0)});
}

TEST_CASE("diameter and wiener index") {
  CHECK(diameter(directed_cycle(3)) == Distance(2));
  CHECK(diameter(Digraph(1)) == Distance(0));
  CHECK(wiener_index(Digraph(1)) == Distance(0));
  Digraph path(3);
  path.add_arc(0, 1);
  path.add_arc(1, 2);
  CHECK(diameter(path).is_infinite());

  CHECK(wiener_index(directed_cycle(3)) == Distance(9));
  CHECK(wiener_index(directed_cycle(4)) == Distance(24));
  Digraph one(2);
  one.add_arc(0, 1);
  CHECK(wiener_index(one).is_infinite());
  CHECK(Distance::infinity().to_string() == "inf");
}

TEST_CASE("connectivity and bridges") {
  const auto p3 = connectivity_report(generate(Family::Path, 3));
  CHECK(p3.connected);
  CHECK(p3.bridges == std::vector<EdgeIndex>{0, 1});

  const auto c4 = connectivity_report(generate(Family::Cycle, 4));
  CHECK(c4.connected);
  CHECK(c4.bridges.empty());

  const auto two = connectivity_report(UndirectedGraph(2, {}));
  CHECK_FALSE(two.connected);
  CHECK(two.bridges.empty());
}

TEST_CASE("bridges agree with brute force on random graphs") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const auto g = t::random_graph(rng, 2 + trial % 9, 0.35);
    const auto report = connectivity_report(g);
    const bool connected = t::matrix_undirected_diameter(g) != UINT64_MAX;
    CHECK(report.connected == connected);
    if (connected) CHECK((report.connected && report.bridges.empty()) == t::is_connected_bridgeless(g));
  }
}

TEST_CASE("edge contraction") {
  const auto c3 = contract_edge(generate(Family::Cycle, 3), 1);
  CHECK(c3 == UndirectedGraph(2, {{0, 1}}));

  const auto p3 = generate(Family::Path, 3);
  CHECK(contract_edge(p3, p3.find_edge(0, 1)) == UndirectedGraph(2, {{0, 1}}));

  // Merging 0 and 1 leaves the two apexes, now ids 1 and 2, each joined once
  // to the merged vertex.
  const auto book = generate(Family::Book, 2);
  const auto merged = contract_edge(book, book.find_edge(0, 1));
  CHECK(merged.vertex_count() == 3);
  CHECK(merged.edge_count() == 2);
  CHECK(merged == UndirectedGraph(3, {{0, 1}, {0, 2}}));

  CHECK(code_of([&] { contract_edge(p3, 2); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("property: undirected distance never exceeds directed distance") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = t::random_connected_graph(rng, 2 + trial % 8, 0.3);
    const auto o = Orientation::from_mask(rng(), g.edge_count());
    const auto und = all_pairs(g);
    const auto dir = all_pairs(orient(g, o));
    for (Vertex x = 0; x < g.vertex_count(); ++x) {
      for (Vertex y = 0; y < g.vertex_count(); ++y) CHECK(und.at(x, y) <= dir.at(x, y));
    }
  }
}

TEST_CASE("property: reversal swaps distances and keeps both measures") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = t::random_connected_graph(rng, 2 + trial % 8, 0.5);
    const auto o = Orientation::from_mask(rng(), g.edge_count());
    const auto h = orient(g, o);
    const auto r = orient(g, o.flipped());
    const auto dh = all_pairs(h);
    const auto dr = all_pairs(r);
    for (Vertex x = 0; x < g.vertex_count(); ++x) {
      for (Vertex y = 0; y < g.vertex_count(); ++y) CHECK(dh.at(x, y) == dr.at(y, x));
    }
    CHECK(diameter(h) == diameter(r));
    CHECK(wiener_index(h) == wiener_index(r));
  }
}

TEST_CASE("property: measures match an independent matrix computation") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const auto g = t::random_connected_graph(rng, 1 + trial % 9, 0.4);
    const auto o = Orientation::from_mask(rng(), g.edge_count());
    const auto h = orient(g, o);
    const auto ref = t::floyd_warshall_measures(g.vertex_count(), oriented_arcs(g, o));
    const auto d = diameter(h);
    const auto z = wiener_index(h);
    CHECK(d.is_infinite() == z.is_infinite());
    CHECK(d.is_finite() == ref.strongly_connected);
    if (ref.strongly_connected) {
      CHECK(d.value() == ref.diameter);
      CHECK(z.value() == ref.wiener);
    }
    CHECK(diameter(g).is_finite());
    CHECK(diameter(g).value() == t::matrix_undirected_diameter(g));
  }
}

TEST_CASE("property: distance matrices obey the triangle inequality") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = t::random_graph(rng, 6, 0.5);
    const auto d = all_pairs(orient(g, Orientation::from_mask(rng(), g.edge_count())));
    for (Vertex x = 0; x < 6; ++x) {
      CHECK(d.at(x, x) == Distance(0));
      for (Vertex y = 0; y < 6; ++y) {
        for (Vertex z = 0; z < 6; ++z) CHECK(d.at(x, z) <= d.at(x, y) + d.at(y, z));
      }
    }
  }
}

TEST_CASE("property: contraction never increases undirected diameter") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = t::random_connected_graph(rng, 2 + trial % 10, 0.2);
    const auto before = diameter(g);
    for (EdgeIndex i = 0; i < g.edge_count(); ++i) CHECK(diameter(contract_edge(g, i)) <= before);
  }
}

TEST_CASE("grid undirected diameter") {
  for (std::size_t g = 1; g <= 10; ++g) CHECK(diameter(generate(Family::Grid, g)) == Distance(2 * (g - 1)));
}

}  // TEST_SUITE
