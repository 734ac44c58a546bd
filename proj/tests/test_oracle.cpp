#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "orientdp/error.hpp"
#include "orientdp/oracle.hpp"
#include "test_support.hpp"

using namespace orientdp;
namespace t = orientdp::testing;

namespace {

// Plain enumeration with no pruning or halving, scored by Floyd-Warshall.
struct Naive {
  std::uint64_t diameter = UINT64_MAX;
  std::uint64_t wiener = UINT64_MAX;
};

Naive naive(const UndirectedGraph& g) {
  Naive best;
  const std::size_t m = g.edge_count();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    const auto r = t::floyd_warshall_measures(g.vertex_count(), oriented_arcs(g, Orientation::from_mask(mask, m)));
    if (!r.strongly_connected) continue;
    best.diameter = std::min(best.diameter, r.diameter);
    best.wiener = std::min(best.wiener, r.wiener);
  }
  return best;
}

std::uint64_t as_u64(Distance d) { return d.is_infinite() ? UINT64_MAX : d.value(); }

oracle::Options plain() {
  oracle::Options o;
  o.symmetry_halving = false;
  o.prune_sources_sinks = false;
  return o;
}

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("minimum diameter landmarks") {
  CHECK(oracle::min_diameter(generate(Family::Cycle, 3)).optimum == Distance(2));
  CHECK(oracle::min_diameter(generate(Family::Complete, 4)).optimum == Distance(3));
  CHECK(oracle::min_diameter(generate(Family::Cycle, 4)).optimum == Distance(3));
}

TEST_CASE("minimum wiener landmarks") {
  CHECK(oracle::min_wiener(generate(Family::Cycle, 3)).optimum == Distance(9));
  CHECK(oracle::min_wiener(generate(Family::Complete, 4)).optimum == Distance(19));
  CHECK(oracle::min_wiener(generate(Family::Cycle, 4)).optimum == Distance(24));
}

TEST_CASE("decide diameter") {
  const auto c3 = oracle::decide_diameter(generate(Family::Cycle, 3), 2);
  CHECK(c3.feasible);
  REQUIRE(c3.witness.has_value());
  CHECK(diameter(orient(generate(Family::Cycle, 3), *c3.witness)) <= Distance(2));

  CHECK_FALSE(oracle::decide_diameter(generate(Family::Cycle, 4), 2).feasible);
  const auto p3 = oracle::decide_diameter(generate(Family::Path, 3), 100);
  CHECK_FALSE(p3.feasible);
  CHECK_FALSE(p3.witness.has_value());
}

TEST_CASE("bridged and disconnected inputs are infinite without search") {
  const auto r = oracle::min_diameter(generate(Family::Path, 4));
  CHECK(r.optimum.is_infinite());
  CHECK(r.explored == 0);
  CHECK(oracle::min_wiener(UndirectedGraph(3, {{0, 1}})).optimum.is_infinite());
}

TEST_CASE("tiny graphs") {
  CHECK(oracle::min_diameter(UndirectedGraph(1, {})).optimum == Distance(0));
  CHECK(oracle::min_wiener(UndirectedGraph(1, {})).optimum == Distance(0));
  CHECK(oracle::decide_diameter(UndirectedGraph(1, {}), 1).feasible);
}

TEST_CASE("cap refusal names the cap") {
  const auto g = generate(Family::Grid, 5);  // 40 edges
  try {
    oracle::min_diameter(g);
    FAIL("cap not enforced");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CapExceeded);
    CHECK(std::string(e.what()).find("26") != std::string::npos);
  }
  oracle::Options o;
  o.edge_cap = 100;
  CHECK_THROWS_AS(oracle::min_diameter(generate(Family::Grid, 7), o), Error);  // 84 edges, above the hard cap
}

TEST_CASE("witness re-evaluates to the optimum and explored is bounded") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 60; ++trial) {
    const auto g = t::random_connected_graph(rng, 3 + trial % 5, 0.5);
    const auto m = g.edge_count();
    const auto d = oracle::min_diameter(g);
    const auto z = oracle::min_wiener(g);
    CHECK(d.explored <= (std::uint64_t{1} << m));
    CHECK(z.explored <= (std::uint64_t{1} << m));
    if (d.optimum.is_finite()) {
      const auto ref = t::floyd_warshall_measures(g.vertex_count(), oriented_arcs(g, d.witness));
      CHECK(ref.diameter == d.optimum.value());
      const auto zr = t::floyd_warshall_measures(g.vertex_count(), oriented_arcs(g, z.witness));
      CHECK(zr.wiener == z.optimum.value());
    }
  }
}

TEST_CASE("pruned and halved search matches plain enumeration for m <= 12") {
  std::mt19937_64 rng(31);
  int checked = 0;
  while (checked < 120) {
    const auto g = t::random_connected_graph(rng, 3 + rng() % 5, 0.45);
    if (g.edge_count() > 12) continue;
    ++checked;
    const auto ref = naive(g);
    const auto fast_d = oracle::min_diameter(g);
    const auto slow_d = oracle::min_diameter(g, plain());
    CHECK(as_u64(fast_d.optimum) == ref.diameter);
    CHECK(as_u64(slow_d.optimum) == ref.diameter);
    CHECK(as_u64(oracle::min_wiener(g).optimum) == ref.wiener);
    CHECK(as_u64(oracle::min_wiener(g, plain()).optimum) == ref.wiener);

    oracle::Options halving_only = plain();
    halving_only.symmetry_halving = true;
    CHECK(oracle::min_diameter(g, halving_only).optimum == fast_d.optimum);
    for (std::uint64_t l = 1; l <= 5; ++l) {
      CHECK(oracle::decide_diameter(g, l).feasible == (ref.diameter <= l));
      CHECK(oracle::decide_diameter(g, l, plain()).feasible == (ref.diameter <= l));
    }
  }
}

TEST_CASE("witness is the least optimal mask") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 40; ++trial) {
    const auto g = t::random_connected_graph(rng, 4 + trial % 3, 0.5);
    const auto r = oracle::min_diameter(g, plain());
    if (r.optimum.is_infinite()) continue;
    const auto m = g.edge_count();
    std::uint64_t first = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
      if (diameter(orient(g, Orientation::from_mask(mask, m))) == r.optimum) {
        first = mask;
        break;
      }
    }
    CHECK(r.witness == Orientation::from_mask(first, m));
  }
}

TEST_CASE("results do not depend on the worker count") {
  const auto g = generate(Family::Grid, 4);  // 24 edges
  oracle::Options one;
  oracle::Options many;
  many.threads = 4;
  const auto a = oracle::min_diameter(g, one);
  const auto b = oracle::min_diameter(g, many);
  CHECK(a.optimum == b.optimum);
  CHECK(a.witness == b.witness);
  CHECK(a.explored == b.explored);

  const auto w1 = oracle::min_wiener(generate(Family::Book, 6), one);
  const auto w4 = oracle::min_wiener(generate(Family::Book, 6), many);
  CHECK(w1.optimum == w4.optimum);
  CHECK(w1.witness == w4.witness);

  const auto d1 = oracle::decide_diameter(g, 6, one);
  const auto d4 = oracle::decide_diameter(g, 6, many);
  CHECK(d1.feasible == d4.feasible);
  CHECK(d1.witness == d4.witness);
}

TEST_CASE("relabeling invariance") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 4 + trial % 3;
    const auto g = t::random_connected_graph(rng, n, 0.5);
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), Vertex{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto h = t::relabel(g, perm);
    CHECK(oracle::min_diameter(g).optimum == oracle::min_diameter(h).optimum);
    CHECK(oracle::min_wiener(g).optimum == oracle::min_wiener(h).optimum);
  }
}

TEST_CASE("adding an edge never increases the minimum diameter") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 4 + trial % 3;
    const auto g = t::random_connected_graph(rng, n, 0.3);
    std::vector<Edge> missing;
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b = a + 1; b < n; ++b) {
        if (!g.has_edge(a, b)) missing.push_back({a, b});
      }
    }
    if (missing.empty()) continue;
    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    edges.push_back(missing[rng() % missing.size()]);
    const UndirectedGraph bigger(n, edges);
    CHECK(oracle::min_diameter(bigger).optimum <= oracle::min_diameter(g).optimum);
  }
}

}  // TEST_SUITE
