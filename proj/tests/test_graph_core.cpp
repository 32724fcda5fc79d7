#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "mcs/instance_io.hpp"

using namespace mcs;

TEST_CASE("build validates and normalizes") {
  ColoredGraph g = test::p3_rbr();
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.color_count() == 2);
  CHECK(g.color_of(0) == 1);
  CHECK(g.color_of(1) == 2);
  CHECK(g.adjacent(0, 1));
  CHECK_FALSE(g.adjacent(0, 2));

  // Colors renumber by first appearance.
  ColoredGraph h = ColoredGraph::build({{0, 1}}, {7, 3});
  CHECK(h.color_of(0) == 1);
  CHECK(h.color_of(1) == 2);
  CHECK(h.color_count() == 2);
}

TEST_CASE("build rejects malformed input") {
  CHECK_THROWS_WITH_AS(ColoredGraph::build({{0, 0}}, {1}),
                       doctest::Contains("0"), Error);
  try {
    ColoredGraph::build({{0, 0}}, {1});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SelfLoop);
  }
  try {
    ColoredGraph::build({{0, 1}, {1, 0}}, {1, 1});
    FAIL("expected duplicate edge rejection");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DuplicateEdge);
  }
  try {
    ColoredGraph::build({{0, 1}}, {1, 2, 3});
    FAIL("expected disconnected rejection");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Disconnected);
    CHECK(std::string(e.what()).find("2") != std::string::npos);
  }
  try {
    ColoredGraph::build({}, {});
    FAIL("expected empty graph rejection");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EmptyGraph);
  }
}

TEST_CASE("distance matrix is BFS-exact") {
  ColoredGraph g = test::p3_rbr();
  DistanceMatrix d(g);
  CHECK(d(0, 2) == 2);
  CHECK(d(2, 0) == 2);
  for (Vertex v = 0; v < 3; v++) CHECK(d(v, v) == 0);

  ColoredGraph star = test::star_rbbb();
  DistanceMatrix ds(star);
  CHECK(ds(1, 2) == 2);
  CHECK(ds(0, 3) == 1);
}

TEST_CASE("distance matrix invariants on random graphs") {
  for (std::uint64_t seed = 0; seed < 10; seed++) {
    ColoredGraph g = generate_gnp_connected(12, 0.3, 3, seed);
    DistanceMatrix d(g);
    int n = g.vertex_count();
    for (Vertex u = 0; u < n; u++) {
      for (Vertex v = 0; v < n; v++) {
        CHECK(d(u, v) == d(v, u));
        CHECK((d(u, v) == 1) == g.adjacent(u, v));
        for (Vertex w = 0; w < n; w++) {
          CHECK(d(u, v) <= d(u, w) + d(w, v));
        }
      }
    }
  }
}

TEST_CASE("distance_to_set") {
  ColoredGraph g = test::p3_rbr();
  DistanceMatrix d(g);
  CHECK(distance_to_set(d, 0, {0, 2}) == 0);
  CHECK(distance_to_set(d, 0, {}) == kInfDist);
  CHECK(distance_to_set(d, 0, {2}) == 2);
}

TEST_CASE("nearest_neighbors") {
  ColoredGraph g = test::p3_rbr();
  DistanceMatrix d(g);
  CHECK(nearest_neighbors(d, 1, {0, 2}) == VertexSet{0, 2});
  CHECK(nearest_neighbors(d, 1, {0, 1, 2}) == VertexSet{1});

  ColoredGraph star = test::star_rbbb();
  DistanceMatrix ds(star);
  CHECK(nearest_neighbors(ds, 1, {0, 2}) == VertexSet{0});

  CHECK_THROWS_AS(nearest_neighbors(d, 0, {}), Error);
}

TEST_CASE("nearest_neighbors members share one distance") {
  for (std::uint64_t seed = 0; seed < 20; seed++) {
    ColoredGraph g = generate_gnp_connected(10, 0.3, 2, seed);
    DistanceMatrix d(g);
    SplitMix64 rng(seed + 1000);
    VertexSet s;
    for (Vertex v = 0; v < g.vertex_count(); v++) {
      if (rng.chance(0.4)) s.push_back(v);
    }
    if (s.empty()) s.push_back(0);
    for (Vertex v = 0; v < g.vertex_count(); v++) {
      VertexSet nn = nearest_neighbors(d, v, s);
      REQUIRE(!nn.empty());
      int want = distance_to_set(d, v, s);
      for (Vertex u : nn) {
        CHECK(test::contains(s, u));
        CHECK(d(v, u) == want);
      }
    }
  }
}

TEST_CASE("is_consistent basics") {
  ColoredGraph g = test::p3_rbr();
  DistanceMatrix d(g);

  Verdict all = is_consistent(g, d, {0, 1, 2});
  CHECK(all.consistent);
  CHECK_FALSE(all.witness.has_value());

  Verdict bad = is_consistent(g, d, {1});
  CHECK_FALSE(bad.consistent);
  REQUIRE(bad.witness.has_value());
  CHECK(*bad.witness == 0);
  CHECK(bad.witness_colors == std::vector<Color>{2});

  CHECK_FALSE(is_consistent(g, d, {}).consistent);

  ColoredGraph mono = test::clique(4, {1, 1, 1, 1});
  DistanceMatrix dm(mono);
  CHECK(is_consistent(mono, dm, {2}).consistent);
}

TEST_CASE("checker properties on random pairs") {
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 50; seed++) {
    ColoredGraph g = generate_gnp_connected(9, 0.3, 3, seed);
    DistanceMatrix d(g);
    // Full vertex set is always consistent.
    VertexSet all;
    for (Vertex v = 0; v < g.vertex_count(); v++) all.push_back(v);
    CHECK(is_consistent(g, d, all).consistent);

    SplitMix64 rng(seed * 31 + 7);
    for (int trial = 0; trial < 2; trial++) {
      VertexSet s;
      for (Vertex v = 0; v < g.vertex_count(); v++) {
        if (rng.chance(0.5)) s.push_back(v);
      }
      if (s.empty()) s.push_back(static_cast<Vertex>(rng.below(9)));
      Verdict verdict = is_consistent(g, d, s);
      CHECK(verdict.consistent == test::naive_consistent(g, d, s));
      if (verdict.consistent) {
        // A consistent set intersects every color class.
        for (Color a = 1; a <= g.color_count(); a++) {
          bool hit = false;
          for (Vertex v : s) hit |= g.color_of(v) == a;
          CHECK(hit);
        }
      } else {
        // The witness actually violates the definition.
        REQUIRE(verdict.witness.has_value());
        Vertex w = *verdict.witness;
        VertexSet nn = nearest_neighbors(d, w, s);
        for (Vertex u : nn) CHECK(g.color_of(u) != g.color_of(w));
      }
      checked++;
    }
  }
  CHECK(checked == 100);
}
