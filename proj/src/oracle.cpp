#include "mcs/oracle.hpp"

#include <numeric>
#include <string>

namespace mcs {

namespace {

bool covers_all_colors(const ColoredGraph& g, const VertexSet& subset) {
  std::vector<char> seen(g.color_count() + 1, 0);
  int distinct = 0;
  for (Vertex v : subset) {
    Color a = g.color_of(v);
    if (!seen[a]) {
      seen[a] = 1;
      distinct++;
    }
  }
  return distinct == g.color_count();
}

// Calls visit(subset) for every size-s subset in lexicographic order
// until visit returns true.
template <typename Visit>
bool for_each_combination(int n, int s, Visit&& visit) {
  VertexSet idx(s);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    if (visit(idx)) return true;
    int i = s - 1;
    while (i >= 0 && idx[i] == n - s + i) i--;
    if (i < 0) return false;
    idx[i]++;
    for (int j = i + 1; j < s; j++) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

Solution brute_force_mcs(const ColoredGraph& g, const DistanceMatrix& dist,
                         int limit, Deadline deadline) {
  const int n = g.vertex_count();
  if (n > limit) {
    throw Error(ErrorCode::TooLarge,
                "brute force limited to " + std::to_string(limit) +
                    " vertices, got " + std::to_string(n));
  }
  Solution sol;
  sol.method = Method::Oracle;
  for (int s = g.color_count(); s <= n; s++) {
    bool expired = false;
    bool found = for_each_combination(n, s, [&](const VertexSet& subset) {
      sol.explored++;
      if (deadline && (sol.explored & 0x3ff) == 0 &&
          std::chrono::steady_clock::now() > *deadline) {
        expired = true;
        return true;
      }
      if (!covers_all_colors(g, subset)) return false;
      if (!is_consistent(g, dist, subset).consistent) return false;
      sol.vertices = subset;
      return true;
    });
    if (expired) break;
    if (found) {
      sol.verified = true;
      return sol;
    }
  }
  // Deadline hit: the full vertex set is always consistent.
  sol.vertices.resize(n);
  std::iota(sol.vertices.begin(), sol.vertices.end(), 0);
  sol.verified = true;
  sol.optimal = false;
  sol.timed_out = true;
  return sol;
}

std::vector<Solution> enumerate_optimal_mcs(const ColoredGraph& g,
                                            const DistanceMatrix& dist,
                                            int limit) {
  const int n = g.vertex_count();
  if (n > limit) {
    throw Error(ErrorCode::TooLarge,
                "optimal enumeration limited to " + std::to_string(limit) +
                    " vertices, got " + std::to_string(n));
  }
  Solution first = brute_force_mcs(g, dist, limit);
  std::vector<Solution> out;
  for_each_combination(n, first.size(), [&](const VertexSet& subset) {
    if (covers_all_colors(g, subset) &&
        is_consistent(g, dist, subset).consistent) {
      Solution sol;
      sol.method = Method::Oracle;
      sol.vertices = subset;
      sol.verified = true;
      out.push_back(std::move(sol));
    }
    return false;
  });
  return out;
}

}  // namespace mcs
