#include "mcs/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <string>
#include <unordered_map>

namespace mcs {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::EmptyGraph: return "EmptyGraph";
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::FamilyTooLarge: return "FamilyTooLarge";
    case ErrorCode::UniverseTooLarge: return "UniverseTooLarge";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::ParameterTooLarge: return "ParameterTooLarge";
    case ErrorCode::NoFeasibleGuess: return "NoFeasibleGuess";
    case ErrorCode::NotConsistent: return "NotConsistent";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::CountMismatch: return "CountMismatch";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::RetriesExhausted: return "RetriesExhausted";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

ColoredGraph ColoredGraph::build(const std::vector<Edge>& edges,
                                 const std::vector<Color>& colors) {
  if (colors.empty()) {
    throw Error(ErrorCode::EmptyGraph, "graph has no vertices");
  }
  const int n = static_cast<int>(colors.size());

  ColoredGraph g;
  g.n_ = n;
  g.adj_.resize(n);

  std::set<Edge> seen;
  for (const Edge& e : edges) {
    Vertex u = e.first;
    Vertex v = e.second;
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw Error(ErrorCode::InvalidParams,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) +
                      ") out of range");
    }
    if (u == v) {
      throw Error(ErrorCode::SelfLoop,
                  "self-loop at vertex " + std::to_string(u));
    }
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second) {
      throw Error(ErrorCode::DuplicateEdge,
                  "duplicate edge (" + std::to_string(u) + "," +
                      std::to_string(v) + ")");
    }
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  g.m_ = static_cast<int>(seen.size());
  for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());

  // Connectivity check via BFS from vertex 0.
  std::vector<char> reached(n, 0);
  std::queue<Vertex> q;
  q.push(0);
  reached[0] = 1;
  int count = 1;
  while (!q.empty()) {
    Vertex v = q.front();
    q.pop();
    for (Vertex w : g.adj_[v]) {
      if (!reached[w]) {
        reached[w] = 1;
        count++;
        q.push(w);
      }
    }
  }
  if (count != n) {
    Vertex first = 0;
    while (reached[first]) first++;
    throw Error(ErrorCode::Disconnected,
                "vertex " + std::to_string(first) + " unreachable from 0");
  }

  // Normalize colors to 1..c in first-appearance order.
  std::unordered_map<Color, Color> remap;
  g.colors_.resize(n);
  for (int v = 0; v < n; v++) {
    auto it = remap.find(colors[v]);
    if (it == remap.end()) {
      Color next = static_cast<Color>(remap.size()) + 1;
      it = remap.emplace(colors[v], next).first;
    }
    g.colors_[v] = it->second;
  }
  g.c_ = static_cast<int>(remap.size());
  g.color_classes_.resize(g.c_);
  for (int v = 0; v < n; v++) g.color_classes_[g.colors_[v] - 1].push_back(v);
  return g;
}

bool ColoredGraph::adjacent(Vertex u, Vertex v) const {
  const VertexSet& nb = adj_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> ColoredGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; u++) {
    for (Vertex v : adj_[u]) {
      if (v > u) out.push_back({u, v});
    }
  }
  return out;
}

DistanceMatrix::DistanceMatrix(const ColoredGraph& g) : n_(g.vertex_count()) {
  dist_.assign(static_cast<size_t>(n_) * n_, kInfDist);
  std::vector<Vertex> frontier;
  for (Vertex s = 0; s < n_; s++) {
    int* row = dist_.data() + static_cast<size_t>(s) * n_;
    row[s] = 0;
    frontier.assign(1, s);
    int d = 0;
    while (!frontier.empty()) {
      std::vector<Vertex> next;
      d++;
      for (Vertex v : frontier) {
        for (Vertex w : g.neighbors(v)) {
          if (row[w] == kInfDist) {
            row[w] = d;
            next.push_back(w);
          }
        }
      }
      frontier = std::move(next);
    }
  }
}

int distance_to_set(const DistanceMatrix& dist, Vertex v, const VertexSet& s) {
  int best = kInfDist;
  for (Vertex u : s) best = std::min(best, dist(v, u));
  return best;
}

VertexSet nearest_neighbors(const DistanceMatrix& dist, Vertex v,
                            const VertexSet& s) {
  if (s.empty()) {
    throw Error(ErrorCode::EmptySet, "nearest_neighbors of empty set");
  }
  int d = distance_to_set(dist, v, s);
  VertexSet out;
  for (Vertex u : s) {
    if (dist(v, u) == d) out.push_back(u);
  }
  return out;
}

Verdict is_consistent(const ColoredGraph& g, const DistanceMatrix& dist,
                      const VertexSet& s) {
  Verdict verdict;
  if (s.empty()) {
    verdict.consistent = false;
    verdict.witness = 0;
    return verdict;
  }
  const int n = g.vertex_count();
  for (Vertex v = 0; v < n; v++) {
    int d = distance_to_set(dist, v, s);
    bool ok = false;
    for (Vertex u : s) {
      if (dist(v, u) == d && g.color_of(u) == g.color_of(v)) {
        ok = true;
        break;
      }
    }
    if (!ok) {
      verdict.consistent = false;
      verdict.witness = v;
      std::set<Color> cols;
      for (Vertex u : s) {
        if (dist(v, u) == d) cols.insert(g.color_of(u));
      }
      verdict.witness_colors.assign(cols.begin(), cols.end());
      return verdict;
    }
  }
  verdict.consistent = true;
  return verdict;
}

}  // namespace mcs
