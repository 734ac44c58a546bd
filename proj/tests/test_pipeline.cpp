#include <random>

#include "doctest.h"
#include "orientdp/error.hpp"
#include "orientdp/pipeline.hpp"
#include "test_support.hpp"

using namespace orientdp;
using namespace orientdp::pipeline;
namespace t = orientdp::testing;

namespace {

void check_witness(const UndirectedGraph& g, const RouteReport& r, std::uint64_t l) {
  if (r.answer != Answer::Yes) {
    CHECK_FALSE(r.witness.has_value());
    return;
  }
  REQUIRE(r.witness.has_value());
  const auto ref = t::floyd_warshall_measures(g.vertex_count(), oriented_arcs(g, *r.witness));
  CHECK(ref.strongly_connected);
  CHECK(ref.diameter <= l);
}

// Graphs on n <= 6 vertices satisfying the Euler bound, listed once per
// isomorphism class.
std::vector<UndirectedGraph> euler_graphs() {
  std::vector<UndirectedGraph> out;
  for (std::size_t n = 1; n <= 6; ++n) {
    for (auto& g : t::all_unlabeled_graphs(n)) {
      if (n >= 3 && g.edge_count() > 3 * n - 6) continue;
      if (t::matrix_undirected_diameter(g) == UINT64_MAX) continue;
      out.push_back(std::move(g));
    }
  }
  return out;
}

}  // namespace

TEST_SUITE("pipeline") {

TEST_CASE("wiener thresholds") {
  CHECK(wiener_threshold(generate(Family::Cycle, 3)) == 9);
  CHECK(wiener_threshold(generate(Family::Cycle, 5)) == 35);
  CHECK(wiener_threshold(generate(Family::Complete, 4)) == 18);
}

TEST_CASE("wiener reduction") {
  const auto c3 = generate(Family::Cycle, 3);
  const auto inst = reduce_diam2_to_wiener(c3);
  CHECK(inst.graph == c3);
  CHECK(inst.threshold == 9);
  CHECK(oracle::min_wiener(c3).optimum == Distance(9));
  CHECK(oracle::min_diameter(c3).optimum == Distance(2));

  const auto k4 = generate(Family::Complete, 4);
  CHECK(reduce_diam2_to_wiener(k4).threshold == 18);
  CHECK(oracle::min_wiener(k4).optimum == Distance(19));
  CHECK(oracle::min_diameter(k4).optimum == Distance(3));

  const auto p3 = generate(Family::Path, 3);
  CHECK(reduce_diam2_to_wiener(p3).threshold == 10);
  CHECK(oracle::min_wiener(p3).optimum.is_infinite());
  CHECK(oracle::min_diameter(p3).optimum.is_infinite());
}

TEST_CASE("diameter-2 equivalence check examples") {
  const auto c3 = check_theorem1(generate(Family::Cycle, 3));
  CHECK(c3.holds);
  CHECK(c3.min_diameter.optimum == Distance(2));
  CHECK(c3.min_wiener.optimum == Distance(9));
  const auto k4 = check_theorem1(generate(Family::Complete, 4));
  CHECK(k4.holds);
  CHECK(k4.min_wiener.optimum == Distance(19));
  CHECK(verify_theorem1(generate(Family::Book, 2)));
  CHECK_THROWS_AS(verify_theorem1(generate(Family::Grid, 5)), Error);
}

TEST_CASE("route examples") {
  const auto grid = decide_planar_orientation(generate(Family::Grid, 5), 3, true);
  CHECK(grid.answer == Answer::No);
  CHECK(grid.route == Route::UndirectedDiameter);
  CHECK(grid.threshold == 49);

  const auto b10 = generate(Family::Book, 10);
  const auto book = decide_planar_orientation(b10, 3, true);
  CHECK(book.answer == Answer::Yes);
  CHECK(book.route == Route::Dp);
  REQUIRE(book.width_used.has_value());
  CHECK(*book.width_used <= 2);
  check_witness(b10, book, 3);

  const auto path = decide_planar_orientation(generate(Family::Path, 3), 5, true);
  CHECK(path.answer == Answer::No);
  CHECK(path.route == Route::Bridge);

  const auto split = decide_planar_orientation(UndirectedGraph(4, {{0, 1}, {2, 3}}), 5, false);
  CHECK(split.answer == Answer::No);
  CHECK(split.route == Route::Disconnected);
  CHECK(route_name(Route::UndirectedDiameter) == "undirected-diameter");
  CHECK(route_name(Route::TreewidthBound) == "treewidth-bound");
}

TEST_CASE("input checks") {
  const auto k5 = generate(Family::Complete, 5);
  try {
    decide_planar_orientation(k5, 3, true);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonPlanar);
  }
  CHECK(decide_planar_orientation(k5, 2, false).answer == Answer::Yes);
  CHECK_THROWS_AS(decide_planar_orientation(k5, 0, false), Error);
}

TEST_CASE("threshold arithmetic") {
  for (std::uint64_t l = 1; l <= 20; ++l) {
    CHECK(planar_width_threshold(l) == 12 * l + 13);
    const auto g = generate(Family::Grid, 2 * l + 3);
    CHECK(td::treewidth_lower_bound(g) <= 6 * (2 * l + 3) - 5);
  }
}

TEST_CASE("treewidth shortcut needs planarity and a certified bound") {
  CHECK(treewidth_shortcut_applies(100, 26, 1, true));
  CHECK_FALSE(treewidth_shortcut_applies(100, 26, 1, false));
  CHECK_FALSE(treewidth_shortcut_applies(100, 25, 1, true));
  CHECK_FALSE(treewidth_shortcut_applies(20, 26, 1, true));
}

TEST_CASE("treewidth-bound route fires on a dense core the caller calls planar") {
  // K51 plus 1128 vertices each joined to two core vertices: m = 3n - 6, no
  // bridges, undirected diameter 3, degeneracy 50 > 12*3 + 13. The graph is
  // not planar; the route trusts the caller's assertion, as documented.
  const std::size_t core = 51, extra = 1128;
  std::vector<Edge> edges;
  for (Vertex a = 0; a < core; ++a) {
    for (Vertex b = a + 1; b < core; ++b) edges.push_back({a, b});
  }
  for (std::size_t i = 0; i < extra; ++i) {
    const auto v = static_cast<Vertex>(core + i);
    edges.push_back({static_cast<Vertex>(i % core), v});
    edges.push_back({static_cast<Vertex>((i + 1) % core), v});
  }
  const UndirectedGraph g(core + extra, edges);
  REQUIRE(g.edge_count() == 3 * g.vertex_count() - 6);
  REQUIRE(td::treewidth_lower_bound(g) == 50);
  const auto r = decide_planar_orientation(g, 3, true);
  CHECK(r.answer == Answer::No);
  CHECK(r.route == Route::TreewidthBound);
  CHECK_FALSE(r.witness.has_value());
}

TEST_CASE("minimize diameter") {
  CHECK(minimize_diameter(generate(Family::Cycle, 4), 5).value == Distance(3));
  CHECK(minimize_diameter(generate(Family::Complete, 4), 5).value == Distance(3));
  const auto c3 = minimize_diameter(generate(Family::Cycle, 3), 5);
  CHECK(c3.value == Distance(2));
  REQUIRE(c3.witness.has_value());
  CHECK(diameter(orient(generate(Family::Cycle, 3), *c3.witness)) == Distance(2));
  CHECK(minimize_diameter(generate(Family::Cycle, 9), 5).value.is_infinite());
  CHECK(minimize_diameter(generate(Family::Path, 3), 5).value.is_infinite());
}

TEST_CASE("minimize agrees with the oracle") {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 40; ++trial) {
    const auto g = t::random_connected_graph(rng, 3 + trial % 5, 0.5);
    const auto got = minimize_diameter(g, 6);
    const auto want = oracle::min_diameter(g).optimum;
    if (want.is_finite() && want.value() <= 6) {
      CHECK(got.value == want);
    } else {
      CHECK(got.value.is_infinite());
    }
  }
}

TEST_CASE("pipeline equals the oracle on small planar-bound graphs") {
  for (const auto& g : euler_graphs()) {
    if (g.edge_count() > 16) continue;
    for (std::uint64_t l = 1; l <= 5; ++l) {
      const auto r = decide_planar_orientation(g, l, g.vertex_count() >= 3);
      CHECK((r.answer == Answer::Yes) == oracle::decide_diameter(g, l).feasible);
      check_witness(g, r, l);
    }
  }
}

TEST_CASE("shortcut NO answers are confirmed by the oracle") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = t::random_graph(rng, 3 + trial % 5, 0.45);
    for (std::uint64_t l = 1; l <= 4; ++l) {
      const auto r = decide_planar_orientation(g, l, false);
      if (r.route != Route::Dp) {
        CHECK(r.answer == Answer::No);
        CHECK_FALSE(oracle::decide_diameter(g, l).feasible);
      }
    }
  }
}

}  // TEST_SUITE
