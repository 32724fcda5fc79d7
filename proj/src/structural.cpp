#include "mcs/structural.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace mcs {

namespace {

struct VcSearch {
  const ColoredGraph& g;
  std::vector<char> in_cover;
  std::vector<Edge> edge_list;

  explicit VcSearch(const ColoredGraph& graph)
      : g(graph), in_cover(graph.vertex_count(), 0), edge_list(graph.edges()) {
    // Max-degree-first edge order: branch early on edges touching
    // high-degree vertices.
    std::stable_sort(edge_list.begin(), edge_list.end(),
                     [&](const Edge& a, const Edge& b) {
                       int da = std::max(g.degree(a.first), g.degree(a.second));
                       int db = std::max(g.degree(b.first), g.degree(b.second));
                       return da > db;
                     });
  }

  bool solve(int budget) {
    const Edge* uncovered = nullptr;
    for (const Edge& e : edge_list) {
      if (!in_cover[e.first] && !in_cover[e.second]) {
        uncovered = &e;
        break;
      }
    }
    if (uncovered == nullptr) return true;
    if (budget == 0) return false;

    Vertex a = uncovered->first;
    Vertex b = uncovered->second;
    if (g.degree(b) > g.degree(a)) std::swap(a, b);
    for (Vertex pick : {a, b}) {
      in_cover[pick] = 1;
      if (solve(budget - 1)) return true;
      in_cover[pick] = 0;
    }
    return false;
  }
};

// Size of a greedy maximal matching: a lower bound on the cover size.
int matching_lower_bound(const ColoredGraph& g) {
  std::vector<char> matched(g.vertex_count(), 0);
  int size = 0;
  for (const Edge& e : g.edges()) {
    if (!matched[e.first] && !matched[e.second]) {
      matched[e.first] = matched[e.second] = 1;
      size++;
    }
  }
  return size;
}

}  // namespace

VertexCoverResult minimum_vertex_cover(const ColoredGraph& g,
                                       std::optional<int> budget) {
  const int n = g.vertex_count();
  int lb = matching_lower_bound(g);

  for (int b = lb; b <= n; b++) {
    if (budget && b > *budget) {
      throw Error(ErrorCode::BudgetExceeded,
                  "minimum vertex cover exceeds budget " +
                      std::to_string(*budget));
    }
    VcSearch search(g);
    if (search.solve(b)) {
      VertexCoverResult result;
      for (Vertex v = 0; v < n; v++) {
        if (search.in_cover[v]) {
          result.cover.push_back(v);
        } else {
          result.independent.push_back(v);
        }
      }
      result.k = static_cast<int>(result.cover.size());
      return result;
    }
  }
  // n == 1: no edges, empty cover.
  VertexCoverResult result;
  result.independent.resize(n);
  std::iota(result.independent.begin(), result.independent.end(), 0);
  return result;
}

TypeDecomposition neighborhood_decomposition(const ColoredGraph& g) {
  const int n = g.vertex_count();

  // Group by open neighborhood and by closed neighborhood; vertices
  // sharing either key are twins. The relation is an equivalence, so a
  // union-find over both groupings yields the quotient.
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };

  std::map<VertexSet, Vertex> open_groups, closed_groups;
  for (Vertex v = 0; v < n; v++) {
    VertexSet open = g.neighbors(v);
    VertexSet closed = open;
    closed.insert(std::lower_bound(closed.begin(), closed.end(), v), v);
    auto [oit, onew] = open_groups.emplace(std::move(open), v);
    if (!onew) unite(v, oit->second);
    auto [cit, cnew] = closed_groups.emplace(std::move(closed), v);
    if (!cnew) unite(v, cit->second);
  }

  TypeDecomposition decomp;
  decomp.type_of.assign(n, -1);
  std::vector<int> class_index(n, -1);
  for (Vertex v = 0; v < n; v++) {
    int root = find(v);
    if (class_index[root] < 0) {
      class_index[root] = decomp.r++;
      decomp.types.emplace_back();
    }
    decomp.type_of[v] = class_index[root];
    decomp.types[class_index[root]].push_back(v);
  }

  decomp.kinds.resize(decomp.r);
  for (int t = 0; t < decomp.r; t++) {
    const VertexSet& cls = decomp.types[t];
    bool clique = cls.size() >= 2 && g.adjacent(cls[0], cls[1]);
    decomp.kinds[t] = clique ? ClassKind::Clique : ClassKind::Independent;
  }

  decomp.type_adjacency.assign(decomp.r, std::vector<char>(decomp.r, 0));
  for (int s = 0; s < decomp.r; s++) {
    for (int t = s + 1; t < decomp.r; t++) {
      char adj = g.adjacent(decomp.types[s][0], decomp.types[t][0]) ? 1 : 0;
      decomp.type_adjacency[s][t] = adj;
      decomp.type_adjacency[t][s] = adj;
    }
  }
  return decomp;
}

}  // namespace mcs
