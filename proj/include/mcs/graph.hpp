#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "mcs/errors.hpp"

namespace mcs {

using Vertex = int;
using Color = int;
using VertexSet = std::vector<Vertex>;  // sorted ascending, no duplicates
using Edge = std::pair<Vertex, Vertex>;

// Sentinel for "no vertex at any finite distance" (empty target set).
inline constexpr int kInfDist = std::numeric_limits<int>::max();

// Simple undirected connected graph with a total vertex coloring.
// Vertices are 0..n-1, colors are normalized to 1..c in first-appearance
// order. Immutable after construction.
class ColoredGraph {
 public:
  // Validates and normalizes. Throws Error with code SelfLoop,
  // DuplicateEdge, Disconnected or EmptyGraph; the message names the
  // first offending element.
  static ColoredGraph build(const std::vector<Edge>& edges,
                            const std::vector<Color>& colors);

  int vertex_count() const { return n_; }
  int edge_count() const { return m_; }
  int color_count() const { return c_; }

  Color color_of(Vertex v) const { return colors_[v]; }
  const std::vector<Color>& colors() const { return colors_; }
  const VertexSet& neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  bool adjacent(Vertex u, Vertex v) const;

  // Sorted edge list (u < v), ascending lexicographic.
  std::vector<Edge> edges() const;

  // Vertices of a given color, ascending.
  const VertexSet& color_class(Color a) const { return color_classes_[a - 1]; }

 private:
  ColoredGraph() = default;

  int n_ = 0;
  int m_ = 0;
  int c_ = 0;
  std::vector<VertexSet> adj_;
  std::vector<Color> colors_;
  std::vector<VertexSet> color_classes_;
};

// All-pairs unweighted shortest-path hop counts.
class DistanceMatrix {
 public:
  explicit DistanceMatrix(const ColoredGraph& g);

  int operator()(Vertex u, Vertex v) const { return dist_[u * n_ + v]; }
  int size() const { return n_; }

 private:
  int n_;
  std::vector<int> dist_;
};

// Outcome of a consistency check. When inconsistent, `witness` is the
// smallest-id violating vertex and `witness_colors` holds the colors of
// its nearest neighbors in the checked set.
struct Verdict {
  bool consistent = false;
  std::optional<Vertex> witness;
  std::vector<Color> witness_colors;
};

// d(v, S) = min over u in S of d(v, u); kInfDist when S is empty.
int distance_to_set(const DistanceMatrix& dist, Vertex v, const VertexSet& s);

// NN(v, S) = members of S at exactly distance_to_set(v, S). S must be
// nonempty (EmptySet otherwise).
VertexSet nearest_neighbors(const DistanceMatrix& dist, Vertex v,
                            const VertexSet& s);

// S is consistent iff it is nonempty and every vertex has a nearest
// neighbor in S of its own color.
Verdict is_consistent(const ColoredGraph& g, const DistanceMatrix& dist,
                      const VertexSet& s);

}  // namespace mcs
