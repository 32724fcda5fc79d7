#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "mcs/hitting_set.hpp"
#include "mcs/rng.hpp"

using namespace mcs;

namespace {

bool hits_all(const std::vector<int>& h, const SetSystem& sys) {
  for (const auto& member : sys.family) {
    bool hit = false;
    for (int e : member) {
      hit |= std::find(h.begin(), h.end(), e) != h.end();
    }
    if (!hit) return false;
  }
  return true;
}

// Exhaustive minimum by subset enumeration over the universe.
int brute_min(const SetSystem& sys) {
  int n = static_cast<int>(sys.universe.size());
  int best = -1;
  for (std::uint32_t mask = 0; mask < (1u << n); mask++) {
    std::vector<int> h;
    for (int i = 0; i < n; i++) {
      if (mask & (1u << i)) h.push_back(sys.universe[i]);
    }
    if (hits_all(h, sys) &&
        (best < 0 || static_cast<int>(h.size()) < best)) {
      best = static_cast<int>(h.size());
    }
  }
  return best;
}

}  // namespace

TEST_CASE("min_hitting_set fixed systems") {
  CHECK(*min_hitting_set({{1, 2, 3}, {{1, 2}, {2, 3}}}) ==
        std::vector<int>{2});
  CHECK(min_hitting_set({{1, 2, 3}, {{1}, {2}, {3}}})->size() == 3);
  // Lexicographically smallest among the size-2 optima.
  CHECK(*min_hitting_set({{1, 2, 3, 4}, {{1, 2}, {3, 4}, {1, 3}}}) ==
        std::vector<int>{1, 3});
  CHECK(min_hitting_set({{1, 2, 3}, {}})->empty());
  CHECK_FALSE(min_hitting_set({{1, 2}, {{1}, {}}}).has_value());
}

TEST_CASE("family limit") {
  SetSystem big;
  for (int i = 0; i < 26; i++) {
    big.universe.push_back(i);
    big.family.push_back({i});
  }
  CHECK_THROWS_AS(min_hitting_set(big), Error);
  try {
    min_hitting_set(big);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::FamilyTooLarge);
  }

  // Duplicate members collapse before the limit applies.
  SetSystem dup;
  dup.universe = {1};
  for (int i = 0; i < 26; i++) dup.family.push_back({1});
  CHECK(*min_hitting_set(dup) == std::vector<int>{1});
  CHECK(enumerate_min_hitting_sets(dup) ==
        std::vector<std::vector<int>>{{1}});
}

TEST_CASE("enumerate_min_hitting_sets fixed systems") {
  CHECK(enumerate_min_hitting_sets({{1, 2}, {{1, 2}}}) ==
        std::vector<std::vector<int>>{{1}, {2}});
  CHECK(enumerate_min_hitting_sets({{1, 2, 3}, {{1, 2}, {2, 3}}}) ==
        std::vector<std::vector<int>>{{2}, {1, 3}});
  CHECK(enumerate_min_hitting_sets({{1, 2, 3}, {}}) ==
        std::vector<std::vector<int>>{{}});
  CHECK(enumerate_min_hitting_sets({{1, 2}, {{1}, {}}}).empty());
}

TEST_CASE("universe limit") {
  SetSystem wide;
  for (int i = 0; i < 26; i++) wide.universe.push_back(i);
  wide.family = {{0, 1}};
  CHECK_THROWS_AS(enumerate_min_hitting_sets(wide), Error);
}

TEST_CASE("random systems agree with brute force") {
  SplitMix64 rng(12345);
  for (int trial = 0; trial < 300; trial++) {
    SetSystem sys;
    int u = 2 + static_cast<int>(rng.below(11));
    for (int i = 0; i < u; i++) sys.universe.push_back(i);
    int m = static_cast<int>(rng.below(7));
    for (int j = 0; j < m; j++) {
      std::vector<int> member;
      for (int e = 0; e < u; e++) {
        if (rng.chance(0.3)) member.push_back(e);
      }
      sys.family.push_back(member);
    }
    int want = brute_min(sys);
    auto got = min_hitting_set(sys);
    if (want < 0) {
      CHECK_FALSE(got.has_value());
      continue;
    }
    REQUIRE(got.has_value());
    CHECK(static_cast<int>(got->size()) == want);
    CHECK(hits_all(*got, sys));
    CHECK(std::is_sorted(got->begin(), got->end()));

    auto all = enumerate_min_hitting_sets(sys);
    CHECK(std::is_sorted(all.begin(), all.end(),
                         [](const auto& a, const auto& b) {
                           if (a.size() != b.size()) return a.size() < b.size();
                           return a < b;
                         }));
    for (const auto& h : all) {
      CHECK(hits_all(h, sys));
      // Inclusion-minimal: dropping any element breaks some member.
      for (size_t i = 0; i < h.size(); i++) {
        std::vector<int> smaller = h;
        smaller.erase(smaller.begin() + i);
        CHECK_FALSE(hits_all(smaller, sys));
      }
    }
    // The enumeration's smallest entry matches the DP optimum.
    REQUIRE(!all.empty());
    CHECK(static_cast<int>(all.front().size()) == want);
  }
}
