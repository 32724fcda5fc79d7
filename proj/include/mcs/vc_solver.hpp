#pragma once

#include <functional>
#include <map>
#include <optional>

#include "mcs/hitting_set.hpp"
#include "mcs/oracle.hpp"
#include "mcs/structural.hpp"

namespace mcs {

inline constexpr int kDefaultVcLimit = 6;

// One joint guess: distances from the cover to the solution plus the
// guessed boundary M1 = N(S cap I) \ (S cap M).
struct VcGuess {
  std::vector<int> distances;  // d_i per cover vertex, 0..2k-1
  VertexSet m0;                // cover vertices with d_i = 0
  VertexSet m1;                // guessed boundary, subset of M \ M0
  VertexSet mx;                // M \ (M0 u M1)
};

// Sets forced by a guess. `extended` holds d_i for every vertex: the
// guessed value on the cover, 1 + min neighbor guess on the
// independent side.
struct DerivedSets {
  VertexSet i_out;
  VertexSet i_in;
  std::vector<int> extended;
  std::map<Color, VertexSet> unsatisfied;  // color -> demand vertices
};

struct VcOptions {
  int k_limit = kDefaultVcLimit;
  int threads = 1;
  Deadline deadline;
};

// All (D, M1) pairs surviving triangle-feasibility pruning, D
// lexicographic then M1 by ascending bitmask.
std::vector<VcGuess> enumerate_guesses(const ColoredGraph& g,
                                       const DistanceMatrix& dist,
                                       const VertexCoverResult& cover);

// Forced/forbidden classification for one guess; nullopt means the
// guess is contradictory and is discarded.
std::optional<DerivedSets> derive_sets(const ColoredGraph& g,
                                       const DistanceMatrix& dist,
                                       const VertexCoverResult& cover,
                                       const VcGuess& guess);

// Minimum color-a set from I \ I_out meeting every unsatisfied demand
// of color a, via minimal hitting sets over the boundary (Guess 3).
// nullopt when no boundary witness combination works.
std::optional<VertexSet> per_color_optimal(const ColoredGraph& g,
                                           const DistanceMatrix& dist,
                                           const VertexCoverResult& cover,
                                           const VcGuess& guess,
                                           const DerivedSets& derived,
                                           Color a);

// The full parameterized solve. Throws ParameterTooLarge when the cover
// exceeds the limit; the result is always checker-verified.
Solution solve_vc(const ColoredGraph& g, const DistanceMatrix& dist,
                  const VertexCoverResult& cover, const VcOptions& options = {});

}  // namespace mcs
