#pragma once

#include <optional>
#include <vector>

#include "mcs/graph.hpp"

namespace mcs {

struct VertexCoverResult {
  VertexSet cover;        // M, sorted
  int k = 0;              // |M|
  VertexSet independent;  // I = V \ M, sorted
};

enum class ClassKind { Independent, Clique };

struct TypeDecomposition {
  int r = 0;
  std::vector<VertexSet> types;     // numbered by smallest member id
  std::vector<int> type_of;        // vertex -> class index
  std::vector<ClassKind> kinds;    // per class; singletons are Independent
  std::vector<std::vector<char>> type_adjacency;  // r x r, all-or-nothing
};

// Exact minimum vertex cover by bounded search tree, branching on an
// uncovered edge. If `budget` is given and the minimum exceeds it,
// throws BudgetExceeded.
VertexCoverResult minimum_vertex_cover(const ColoredGraph& g,
                                       std::optional<int> budget = {});

// Twin-equivalence quotient: u ~ v iff N(u) = N(v) or N[u] = N[v].
TypeDecomposition neighborhood_decomposition(const ColoredGraph& g);

}  // namespace mcs
