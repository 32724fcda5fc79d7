#pragma once

#include <chrono>
#include <optional>
#include <vector>

#include "mcs/solution.hpp"

namespace mcs {

using Deadline = std::optional<std::chrono::steady_clock::time_point>;

inline constexpr int kDefaultBruteLimit = 20;
inline constexpr int kDefaultEnumerateLimit = 16;

// Exhaustive minimum consistent subset. Enumeration by increasing size
// starting at the color count; within a size, lexicographic; first hit
// wins. On deadline expiry returns V(G) as a verified non-optimal
// fallback with timed_out set.
Solution brute_force_mcs(const ColoredGraph& g, const DistanceMatrix& dist,
                         int limit = kDefaultBruteLimit,
                         Deadline deadline = {});

// All consistent subsets of minimum size, lexicographically sorted.
std::vector<Solution> enumerate_optimal_mcs(const ColoredGraph& g,
                                            const DistanceMatrix& dist,
                                            int limit = kDefaultEnumerateLimit);

}  // namespace mcs
