#include "mcs/instance_io.hpp"

#include <algorithm>
#include <sstream>

namespace mcs {

namespace {

[[noreturn]] void syntax_error(int line, const std::string& what) {
  throw Error(ErrorCode::SyntaxError,
              "line " + std::to_string(line) + ": " + what);
}

}  // namespace

ColoredGraph parse_instance(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;

  int n = -1, m = -1, c = -1;
  std::vector<Color> colors;
  std::vector<char> color_set;
  std::vector<Edge> edges;
  int vertex_lines = 0;

  while (std::getline(in, line)) {
    line_no++;
    // Tolerate trailing CR from foreign editors.
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;

    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "p") {
      if (n >= 0) syntax_error(line_no, "duplicate header");
      std::string fmt;
      if (!(ls >> fmt >> n >> m >> c) || fmt != "mcs" || n <= 0 || m < 0 ||
          c <= 0) {
        syntax_error(line_no, "expected 'p mcs <n> <m> <c>'");
      }
      colors.assign(n, 0);
      color_set.assign(n, 0);
    } else if (tag == "v") {
      if (n < 0) syntax_error(line_no, "vertex line before header");
      int id, col;
      if (!(ls >> id >> col)) syntax_error(line_no, "expected 'v <id> <color>'");
      if (id < 1 || id > n) syntax_error(line_no, "vertex id out of range");
      if (col < 1 || col > c) syntax_error(line_no, "color out of range");
      if (color_set[id - 1]) syntax_error(line_no, "vertex recolored");
      colors[id - 1] = col;
      color_set[id - 1] = 1;
      vertex_lines++;
    } else if (tag == "e") {
      if (n < 0) syntax_error(line_no, "edge line before header");
      int u, v;
      if (!(ls >> u >> v)) syntax_error(line_no, "expected 'e <u> <v>'");
      if (u < 1 || u > n || v < 1 || v > n) {
        syntax_error(line_no, "edge endpoint out of range");
      }
      edges.push_back({u - 1, v - 1});
    } else {
      syntax_error(line_no, "unknown line tag '" + tag + "'");
    }
  }
  if (n < 0) throw Error(ErrorCode::SyntaxError, "missing 'p mcs' header");
  if (vertex_lines != n) {
    throw Error(ErrorCode::CountMismatch,
                "header declares " + std::to_string(n) + " vertices, found " +
                    std::to_string(vertex_lines));
  }
  if (static_cast<int>(edges.size()) != m) {
    throw Error(ErrorCode::CountMismatch,
                "header declares " + std::to_string(m) + " edges, found " +
                    std::to_string(edges.size()));
  }
  return ColoredGraph::build(edges, colors);
}

std::string serialize_instance(const ColoredGraph& g) {
  std::ostringstream out;
  out << "p mcs " << g.vertex_count() << " " << g.edge_count() << " "
      << g.color_count() << "\n";
  for (Vertex v = 0; v < g.vertex_count(); v++) {
    out << "v " << v + 1 << " " << g.color_of(v) << "\n";
  }
  for (const Edge& e : g.edges()) {
    out << "e " << e.first + 1 << " " << e.second + 1 << "\n";
  }
  return out.str();
}

namespace {

std::vector<Color> random_colors(SplitMix64& rng, int n, int c) {
  std::vector<Color> colors(n);
  for (int v = 0; v < n; v++) {
    colors[v] = static_cast<Color>(rng.below(static_cast<std::uint64_t>(c))) + 1;
  }
  return colors;
}

}  // namespace

ColoredGraph generate_gnp_connected(int n, double p, int c,
                                    std::uint64_t seed) {
  if (n <= 0 || c <= 0 || p < 0.0 || p > 1.0) {
    throw Error(ErrorCode::InvalidParams, "gnp_connected: bad parameters");
  }
  SplitMix64 rng(seed);
  constexpr int kMaxRetries = 10000;
  for (int attempt = 0; attempt < kMaxRetries; attempt++) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; u++) {
      for (Vertex v = u + 1; v < n; v++) {
        if (rng.chance(p)) edges.push_back({u, v});
      }
    }
    std::vector<Color> colors = random_colors(rng, n, c);
    try {
      return ColoredGraph::build(edges, colors);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::Disconnected) throw;
    }
  }
  throw Error(ErrorCode::RetriesExhausted,
              "gnp_connected: no connected draw after retries");
}

ColoredGraph generate_planted_vc(int k, int n, int c, double density,
                                 std::uint64_t seed) {
  if (k <= 0 || n < k || c <= 0 || density < 0.0 || density > 1.0) {
    throw Error(ErrorCode::InvalidParams, "planted_vc: bad parameters");
  }
  SplitMix64 rng(seed);
  std::vector<Edge> edges;
  // Spanning tree over the cover keeps the cover side connected.
  for (Vertex v = 1; v < k; v++) {
    edges.push_back({static_cast<Vertex>(rng.below(v)), v});
  }
  // Every independent vertex hangs off a random cover vertex.
  for (Vertex v = k; v < n; v++) {
    edges.push_back({static_cast<Vertex>(rng.below(k)), v});
  }
  std::sort(edges.begin(), edges.end());
  auto has_edge = [&edges](Vertex u, Vertex v) {
    return std::binary_search(edges.begin(), edges.end(), Edge{u, v});
  };
  std::vector<Edge> extra;
  for (Vertex u = 0; u < k; u++) {
    for (Vertex v = u + 1; v < n; v++) {
      if (!has_edge(u, v) && rng.chance(density)) extra.push_back({u, v});
    }
  }
  edges.insert(edges.end(), extra.begin(), extra.end());
  return ColoredGraph::build(edges, random_colors(rng, n, c));
}

ColoredGraph generate_planted_nd(const std::vector<int>& sizes, int c,
                                 double density, std::uint64_t seed) {
  const int r = static_cast<int>(sizes.size());
  if (r <= 0 || c <= 0 || density < 0.0 || density > 1.0) {
    throw Error(ErrorCode::InvalidParams, "planted_nd: bad parameters");
  }
  int n = 0;
  for (int s : sizes) {
    if (s <= 0) throw Error(ErrorCode::InvalidParams, "planted_nd: bad size");
    n += s;
  }
  SplitMix64 rng(seed);

  std::vector<int> type_start(r);
  for (int t = 1; t < r; t++) type_start[t] = type_start[t - 1] + sizes[t - 1];

  // Class kind: clique or independent at random. A lone multi-vertex
  // class must be a clique to stay connected.
  std::vector<char> clique(r);
  for (int t = 0; t < r; t++) clique[t] = rng.below(2) == 1;
  if (r == 1 && sizes[0] > 1) clique[0] = 1;

  // Connected type graph: random tree plus density extras.
  std::vector<std::vector<char>> type_adj(r, std::vector<char>(r, 0));
  for (int t = 1; t < r; t++) {
    int s = static_cast<int>(rng.below(t));
    type_adj[s][t] = type_adj[t][s] = 1;
  }
  for (int s = 0; s < r; s++) {
    for (int t = s + 1; t < r; t++) {
      if (!type_adj[s][t] && rng.chance(density)) {
        type_adj[s][t] = type_adj[t][s] = 1;
      }
    }
  }

  std::vector<Edge> edges;
  for (int t = 0; t < r; t++) {
    if (!clique[t]) continue;
    for (int i = 0; i < sizes[t]; i++) {
      for (int j = i + 1; j < sizes[t]; j++) {
        edges.push_back({type_start[t] + i, type_start[t] + j});
      }
    }
  }
  for (int s = 0; s < r; s++) {
    for (int t = s + 1; t < r; t++) {
      if (!type_adj[s][t]) continue;
      for (int i = 0; i < sizes[s]; i++) {
        for (int j = 0; j < sizes[t]; j++) {
          edges.push_back({type_start[s] + i, type_start[t] + j});
        }
      }
    }
  }
  return ColoredGraph::build(edges, random_colors(rng, n, c));
}

}  // namespace mcs
