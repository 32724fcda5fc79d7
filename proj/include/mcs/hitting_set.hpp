#pragma once

#include <optional>
#include <vector>

#include "mcs/errors.hpp"

namespace mcs {

// A set system (U, F). Family members must be subsets of the universe.
// An empty member makes the instance infeasible; an empty family is hit
// by the empty set.
struct SetSystem {
  std::vector<int> universe;
  std::vector<std::vector<int>> family;
};

inline constexpr int kDefaultFamilyLimit = 25;
inline constexpr int kDefaultUniverseLimit = 25;

// Minimum-cardinality hitting set via subset dynamic programming over
// the 2^|F| space of element signatures. Returns nullopt when some
// family member is empty (infeasible). Ties broken toward the
// lexicographically smallest element set.
std::optional<std::vector<int>> min_hitting_set(
    const SetSystem& sys, int family_limit = kDefaultFamilyLimit);

// All inclusion-wise minimal hitting sets, deduplicated, sorted by
// (size, lexicographic). Duplicate and superset family members are
// dropped before the limits apply. Empty family yields {{}}; an empty
// member yields an empty list.
std::vector<std::vector<int>> enumerate_min_hitting_sets(
    const SetSystem& sys, int family_limit = kDefaultFamilyLimit,
    int universe_limit = kDefaultUniverseLimit);

}  // namespace mcs
