#pragma once

#include <algorithm>
#include <vector>

#include "mcs/graph.hpp"

namespace test {

// Path 0-1-2 colored red, blue, red.
inline mcs::ColoredGraph p3_rbr() {
  return mcs::ColoredGraph::build({{0, 1}, {1, 2}}, {1, 2, 1});
}

// Star with center 0; center red, three blue leaves.
inline mcs::ColoredGraph star_rbbb() {
  return mcs::ColoredGraph::build({{0, 1}, {0, 2}, {0, 3}}, {1, 2, 2, 2});
}

inline mcs::ColoredGraph clique(int n, const std::vector<mcs::Color>& colors) {
  std::vector<mcs::Edge> edges;
  for (int u = 0; u < n; u++) {
    for (int v = u + 1; v < n; v++) edges.push_back({u, v});
  }
  return mcs::ColoredGraph::build(edges, colors);
}

inline mcs::ColoredGraph path(int n, const std::vector<mcs::Color>& colors) {
  std::vector<mcs::Edge> edges;
  for (int v = 0; v + 1 < n; v++) edges.push_back({v, v + 1});
  return mcs::ColoredGraph::build(edges, colors);
}

inline mcs::ColoredGraph cycle(int n, const std::vector<mcs::Color>& colors) {
  std::vector<mcs::Edge> edges;
  for (int v = 0; v < n; v++) edges.push_back({v, (v + 1) % n});
  return mcs::ColoredGraph::build(edges, colors);
}

inline bool contains(const mcs::VertexSet& s, mcs::Vertex v) {
  return std::binary_search(s.begin(), s.end(), v);
}

// Literal quantifier expansion of the consistency definition, kept
// independent of the library checker on purpose.
inline bool naive_consistent(const mcs::ColoredGraph& g,
                             const mcs::DistanceMatrix& dist,
                             const mcs::VertexSet& s) {
  if (s.empty()) return false;
  for (mcs::Vertex v = 0; v < g.vertex_count(); v++) {
    int best = mcs::kInfDist;
    for (mcs::Vertex u : s) best = std::min(best, dist(v, u));
    bool ok = false;
    for (mcs::Vertex u : s) {
      if (dist(v, u) == best && g.color_of(u) == g.color_of(v)) ok = true;
    }
    if (!ok) return false;
  }
  return true;
}

}  // namespace test
