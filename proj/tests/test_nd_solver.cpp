#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "mcs/instance_io.hpp"
#include "mcs/nd_solver.hpp"

using namespace mcs;

namespace {

Solution solve(const ColoredGraph& g) {
  DistanceMatrix d(g);
  return solve_nd(g, d, neighborhood_decomposition(g));
}

// Independent scenario counter: recursive assignment of a role and a
// label mask per type, checking validity at the leaves only.
void count_rec(int t, int r, int k, const std::vector<char>& multi,
               std::uint32_t used, std::vector<int>& roles, long& count) {
  if (t == r) {
    if (used == (1u << k) - 1) count++;
    return;
  }
  // T0
  roles[t] = 0;
  count_rec(t + 1, r, k, multi, used, roles, count);
  // T1 with each single label
  for (int j = 0; j < k; j++) {
    roles[t] = 1;
    count_rec(t + 1, r, k, multi, used | (1u << j), roles, count);
  }
  // T2 with each mask of two or more labels
  if (multi[t]) {
    for (std::uint32_t m = 0; m < (1u << k); m++) {
      if (__builtin_popcount(m) < 2) continue;
      roles[t] = 2;
      count_rec(t + 1, r, k, multi, used | m, roles, count);
    }
  }
}

long independent_scenario_count(const ColoredGraph& g,
                                const TypeDecomposition& decomp) {
  std::vector<char> multi(decomp.r, 0);
  for (int t = 0; t < decomp.r; t++) {
    std::set<Color> cols;
    for (Vertex v : decomp.types[t]) cols.insert(g.color_of(v));
    multi[t] = cols.size() >= 2;
  }
  long total = 0;
  int k_max = std::min(2 * decomp.r, g.color_count());
  for (int k = 1; k <= k_max; k++) {
    std::vector<int> roles(decomp.r);
    count_rec(0, decomp.r, k, multi, 0, roles, total);
  }
  return total;
}

}  // namespace

TEST_CASE("fixed shapes") {
  CHECK(solve(test::p3_rbr()).size() == 3);
  CHECK(solve(test::clique(5, {1, 1, 1, 1, 1})).size() == 1);
  CHECK(solve(test::clique(2, {1, 2})).size() == 2);
}

TEST_CASE("scenario enumeration counts") {
  {
    // One two-colored clique class: either one solution color (T1, one
    // label) or both (T2, two labels).
    ColoredGraph g = test::clique(2, {1, 2});
    TypeDecomposition d = neighborhood_decomposition(g);
    REQUIRE(d.r == 1);
    auto scenarios = enumerate_scenarios(g, d);
    REQUIRE(scenarios.size() == 2);
    CHECK(scenarios[0].first.roles[0] == TypeRole::T1);
    CHECK(scenarios[0].second.k == 1);
    CHECK(scenarios[1].first.roles[0] == TypeRole::T2);
    CHECK(scenarios[1].second.k == 2);
    CHECK(scenarios[1].second.type_labels[0] == 0b11u);
  }
  {
    // Monochromatic class: T2 is invalid, only T1 scenarios remain.
    ColoredGraph g = test::clique(3, {1, 1, 1});
    TypeDecomposition d = neighborhood_decomposition(g);
    auto scenarios = enumerate_scenarios(g, d);
    REQUIRE(scenarios.size() == 1);
    CHECK(scenarios[0].first.roles[0] == TypeRole::T1);
    CHECK(scenarios[0].second.k == 1);
  }
  for (std::uint64_t seed = 0; seed < 12; seed++) {
    ColoredGraph g = generate_planted_nd({2 + static_cast<int>(seed) % 3, 2},
                                         2 + seed % 3, 0.6, seed);
    TypeDecomposition d = neighborhood_decomposition(g);
    CHECK(static_cast<long>(enumerate_scenarios(g, d).size()) ==
          independent_scenario_count(g, d));
  }
}

TEST_CASE("labeling enumeration") {
  CHECK(enumerate_labelings(2, 2, LabelingMode::Exhaustive).size() == 4);
  CHECK(enumerate_labelings(3, 2, LabelingMode::Exhaustive).size() == 8);
  CHECK_THROWS_AS(
      enumerate_labelings(30, 4, LabelingMode::Exhaustive, 0, 0, 1000000),
      Error);

  auto a = enumerate_labelings(5, 3, LabelingMode::Random, 99, 20);
  auto b = enumerate_labelings(5, 3, LabelingMode::Random, 99, 20);
  REQUIRE(a.size() == 20);
  for (size_t i = 0; i < a.size(); i++) {
    CHECK(a[i].label_of == b[i].label_of);
    for (int label : a[i].label_of) {
      CHECK(label >= 0);
      CHECK(label < 3);
    }
  }
}

TEST_CASE("twin distance regularity") {
  for (std::uint64_t seed = 0; seed < 15; seed++) {
    ColoredGraph g = generate_planted_nd({3, 2, 4}, 3, 0.5, seed);
    DistanceMatrix dist(g);
    TypeDecomposition d = neighborhood_decomposition(g);
    for (Vertex v = 0; v < g.vertex_count(); v++) {
      for (int t = 0; t < d.r; t++) {
        int seen = -1;
        for (Vertex u : d.types[t]) {
          if (u == v) continue;
          if (seen == -1) seen = dist(v, u);
          CHECK(dist(v, u) == seen);
        }
      }
    }
  }
}

TEST_CASE("minimal responsible set") {
  // One single-colored class in the solution forces its color.
  ColoredGraph g = test::p3_rbr();
  DistanceMatrix dist(g);
  TypeDecomposition d = neighborhood_decomposition(g);
  auto r = minimal_responsible_set(g, dist, d, {0, 1, 2});
  // Type {0,2} holds color 1 only, type {1} holds color 2.
  CHECK(r == std::vector<Color>{1, 2});

  CHECK_THROWS_AS(minimal_responsible_set(g, dist, d, {1}), Error);

  // A class with three solution colors contributes exactly two.
  ColoredGraph k3 = test::clique(3, {1, 2, 3});
  DistanceMatrix dk(k3);
  TypeDecomposition dd = neighborhood_decomposition(k3);
  REQUIRE(dd.r == 1);
  auto rk = minimal_responsible_set(k3, dk, dd, {0, 1, 2});
  CHECK(rk.size() == 2);
}

TEST_CASE("responsible set size bound and distance identity") {
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 40; seed++) {
    ColoredGraph g = generate_planted_nd({2 + static_cast<int>(seed % 3), 2, 2},
                                         2 + seed % 3, 0.5, seed);
    DistanceMatrix dist(g);
    TypeDecomposition d = neighborhood_decomposition(g);
    Solution opt = brute_force_mcs(g, dist);
    auto resp = minimal_responsible_set(g, dist, d, opt.vertices);
    CHECK(static_cast<int>(resp.size()) <= 2 * d.r);

    // d(v, S minus v's class) equals d(v, responsible-colored part of S
    // excluding v's color), for every vertex.
    for (Vertex v = 0; v < g.vertex_count(); v++) {
      VertexSet others, resp_others;
      for (Vertex u : opt.vertices) {
        if (g.color_of(u) == g.color_of(v)) continue;
        others.push_back(u);
        for (Color a : resp) {
          if (g.color_of(u) == a) resp_others.push_back(u);
        }
      }
      if (others.empty()) continue;
      CHECK(distance_to_set(dist, v, others) ==
            distance_to_set(dist, v, resp_others));
      checked++;
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("parameter limit") {
  ColoredGraph p5 = test::path(5, {1, 1, 1, 1, 1});
  DistanceMatrix dist(p5);
  TypeDecomposition d = neighborhood_decomposition(p5);
  REQUIRE(d.r == 5);
  CHECK_THROWS_AS(solve_nd(p5, dist, d), Error);
  try {
    solve_nd(p5, dist, d);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParameterTooLarge);
  }
}

TEST_CASE("deadline fallback") {
  ColoredGraph g = generate_planted_nd({30, 30, 30}, 4, 0.5, 5);
  DistanceMatrix dist(g);
  TypeDecomposition d = neighborhood_decomposition(g);
  NdOptions opt;
  opt.deadline = std::chrono::steady_clock::now();
  Solution s = solve_nd(g, dist, d, opt);
  CHECK(s.timed_out);
  CHECK_FALSE(s.optimal);
  CHECK(s.verified);
}

TEST_CASE("matches the exhaustive optimum") {
  int run = 0;
  for (std::uint64_t seed = 0; seed < 60; seed++) {
    ColoredGraph g = generate_planted_nd(
        {2 + static_cast<int>(seed % 3), 1 + static_cast<int>(seed % 2), 2},
        2 + seed % 3, 0.5, seed);
    DistanceMatrix dist(g);
    TypeDecomposition d = neighborhood_decomposition(g);
    if (d.r > kDefaultNdLimit) continue;
    Solution got = solve_nd(g, dist, d);
    Solution want = brute_force_mcs(g, dist);
    CHECK(got.size() == want.size());
    CHECK(got.verified);
    CHECK(is_consistent(g, dist, got.vertices).consistent);
    run++;
  }
  CHECK(run >= 50);
}

TEST_CASE("scenario sweep agrees with the dynamic program") {
  for (std::uint64_t seed = 100; seed < 130; seed++) {
    ColoredGraph g = generate_planted_nd(
        {2 + static_cast<int>(seed % 2), 2, 1 + static_cast<int>(seed % 2)},
        2 + seed % 2, 0.5, seed);
    DistanceMatrix dist(g);
    TypeDecomposition d = neighborhood_decomposition(g);
    if (d.r > 3 || g.color_count() > 3) continue;
    Solution sweep = solve_nd_scenarios(g, dist, d);
    Solution engine = solve_nd(g, dist, d);
    CHECK(sweep.size() == engine.size());
    CHECK(is_consistent(g, dist, sweep.vertices).consistent);
  }
}

TEST_CASE("random labeling mode yields a verified upper bound") {
  ColoredGraph g = generate_planted_nd({3, 3}, 3, 0.5, 77);
  DistanceMatrix dist(g);
  TypeDecomposition d = neighborhood_decomposition(g);
  Solution s = solve_nd_scenarios(g, dist, d, LabelingMode::Random, 7, 5);
  CHECK(s.verified);
  CHECK(is_consistent(g, dist, s.vertices).consistent);
  CHECK(s.size() >= brute_force_mcs(g, dist).size());
}
