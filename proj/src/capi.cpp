#include "mcs.h"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "mcs/instance_io.hpp"
#include "mcs/solve.hpp"
#include "mcs/structural.hpp"

struct mcs_graph {
  explicit mcs_graph(mcs::ColoredGraph graph) : g(std::move(graph)) {}

  mcs::ColoredGraph g;
  // Lazy caches; the graph is immutable so computing once is safe.
  mutable std::optional<mcs::DistanceMatrix> dist;
  mutable std::optional<mcs::TypeDecomposition> decomp;

  const mcs::DistanceMatrix& distances() const {
    if (!dist) dist.emplace(g);
    return *dist;
  }
  const mcs::TypeDecomposition& decomposition() const {
    if (!decomp) decomp = mcs::neighborhood_decomposition(g);
    return *decomp;
  }
};

struct mcs_solution {
  mcs::Solution sol;
};

namespace {

void set_err(char* errbuf, size_t len, const std::string& msg) {
  if (!errbuf || len == 0) return;
  size_t n = std::min(msg.size(), len - 1);
  std::memcpy(errbuf, msg.data(), n);
  errbuf[n] = '\0';
}

mcs_status status_of(const mcs::Error& e) {
  switch (e.code()) {
    case mcs::ErrorCode::SyntaxError:
    case mcs::ErrorCode::CountMismatch:
      return MCS_ERR_PARSE;
    case mcs::ErrorCode::SelfLoop:
    case mcs::ErrorCode::DuplicateEdge:
    case mcs::ErrorCode::Disconnected:
    case mcs::ErrorCode::EmptyGraph:
      return MCS_ERR_VALIDATION;
    case mcs::ErrorCode::ParameterTooLarge:
    case mcs::ErrorCode::TooLarge:
    case mcs::ErrorCode::BudgetExceeded:
      return MCS_ERR_PARAMETER_TOO_LARGE;
    case mcs::ErrorCode::InvalidParams:
    case mcs::ErrorCode::RetriesExhausted:
    case mcs::ErrorCode::EmptySet:
      return MCS_ERR_INVALID_ARGUMENT;
    default:
      return MCS_ERR_INTERNAL;
  }
}

template <typename F>
mcs_status guarded(char* errbuf, size_t errbuf_len, F&& f) {
  try {
    return f();
  } catch (const mcs::Error& e) {
    set_err(errbuf, errbuf_len, e.what());
    return status_of(e);
  } catch (const std::exception& e) {
    set_err(errbuf, errbuf_len, e.what());
    return MCS_ERR_INTERNAL;
  }
}

}  // namespace

extern "C" {

const char* mcs_status_name(mcs_status status) {
  switch (status) {
    case MCS_OK: return "ok";
    case MCS_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case MCS_ERR_PARSE: return "parse_error";
    case MCS_ERR_VALIDATION: return "validation_error";
    case MCS_ERR_PARAMETER_TOO_LARGE: return "parameter_too_large";
    case MCS_ERR_TIMEOUT: return "timeout";
    case MCS_ERR_IO: return "io_error";
    case MCS_ERR_INTERNAL: return "internal_error";
  }
  return "unknown";
}

mcs_status mcs_graph_from_text(const char* text, mcs_graph** out,
                               char* errbuf, size_t errbuf_len) {
  if (!text || !out) {
    set_err(errbuf, errbuf_len, "null argument");
    return MCS_ERR_INVALID_ARGUMENT;
  }
  return guarded(errbuf, errbuf_len, [&] {
    auto handle = std::make_unique<mcs_graph>(mcs::parse_instance(text));
    *out = handle.release();
    return MCS_OK;
  });
}

mcs_status mcs_graph_from_file(const char* path, mcs_graph** out,
                               char* errbuf, size_t errbuf_len) {
  if (!path || !out) {
    set_err(errbuf, errbuf_len, "null argument");
    return MCS_ERR_INVALID_ARGUMENT;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    set_err(errbuf, errbuf_len, std::string("cannot open ") + path);
    return MCS_ERR_IO;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return mcs_graph_from_text(buf.str().c_str(), out, errbuf, errbuf_len);
}

void mcs_graph_free(mcs_graph* g) { delete g; }

int mcs_graph_vertex_count(const mcs_graph* g) {
  return g ? g->g.vertex_count() : -1;
}
int mcs_graph_edge_count(const mcs_graph* g) {
  return g ? g->g.edge_count() : -1;
}
int mcs_graph_color_count(const mcs_graph* g) {
  return g ? g->g.color_count() : -1;
}
int mcs_graph_color_of(const mcs_graph* g, int vertex) {
  if (!g || vertex < 0 || vertex >= g->g.vertex_count()) return -1;
  return g->g.color_of(vertex);
}

mcs_status mcs_graph_to_text(const mcs_graph* g, char** out,
                             char* errbuf, size_t errbuf_len) {
  if (!g || !out) {
    set_err(errbuf, errbuf_len, "null argument");
    return MCS_ERR_INVALID_ARGUMENT;
  }
  return guarded(errbuf, errbuf_len, [&] {
    std::string text = mcs::serialize_instance(g->g);
    char* copy = static_cast<char*>(std::malloc(text.size() + 1));
    if (!copy) {
      set_err(errbuf, errbuf_len, "out of memory");
      return MCS_ERR_INTERNAL;
    }
    std::memcpy(copy, text.data(), text.size() + 1);
    *out = copy;
    return MCS_OK;
  });
}

void mcs_string_free(char* s) { std::free(s); }

mcs_status mcs_generate_gnp(int n, double p, int colors, uint64_t seed,
                            mcs_graph** out, char* errbuf,
                            size_t errbuf_len) {
  if (!out) {
    set_err(errbuf, errbuf_len, "null argument");
    return MCS_ERR_INVALID_ARGUMENT;
  }
  return guarded(errbuf, errbuf_len, [&] {
    auto handle = std::make_unique<mcs_graph>(
        mcs::generate_gnp_connected(n, p, colors, seed));
    *out = handle.release();
    return MCS_OK;
  });
}

mcs_status mcs_generate_planted_vc(int k, int n, int colors, double density,
                                   uint64_t seed, mcs_graph** out,
                                   char* errbuf, size_t errbuf_len) {
  if (!out) {
    set_err(errbuf, errbuf_len, "null argument");
    return MCS_ERR_INVALID_ARGUMENT;
  }
  return guarded(errbuf, errbuf_len, [&] {
    auto handle = std::make_unique<mcs_graph>(
        mcs::generate_planted_vc(k, n, colors, density, seed));
    *out = handle.release();
    return MCS_OK;
  });
}

mcs_status mcs_generate_planted_nd(const int* sizes, int r, int colors,
                                   double density, uint64_t seed,
                                   mcs_graph** out, char* errbuf,
                                   size_t errbuf_len) {
  if (!out || !sizes || r <= 0) {
    set_err(errbuf, errbuf_len, "null or empty size list");
    return MCS_ERR_INVALID_ARGUMENT;
  }
  return guarded(errbuf, errbuf_len, [&] {
    std::vector<int> s(sizes, sizes + r);
    auto handle = std::make_unique<mcs_graph>(
        mcs::generate_planted_nd(s, colors, density, seed));
    *out = handle.release();
    return MCS_OK;
  });
}

mcs_status mcs_vertex_cover(const mcs_graph* g, int budget, int* k_out,
                            char* errbuf, size_t errbuf_len) {
  if (!g || !k_out) {
    set_err(errbuf, errbuf_len, "null argument");
    return MCS_ERR_INVALID_ARGUMENT;
  }
  return guarded(errbuf, errbuf_len, [&] {
    std::optional<int> b;
    if (budget >= 0) b = budget;
    *k_out = mcs::minimum_vertex_cover(g->g, b).k;
    return MCS_OK;
  });
}

mcs_status mcs_neighborhood_diversity(const mcs_graph* g, int* r_out,
                                      char* errbuf, size_t errbuf_len) {
  if (!g || !r_out) {
    set_err(errbuf, errbuf_len, "null argument");
    return MCS_ERR_INVALID_ARGUMENT;
  }
  return guarded(errbuf, errbuf_len, [&] {
    *r_out = g->decomposition().r;
    return MCS_OK;
  });
}

mcs_status mcs_type_info(const mcs_graph* g, int type_index, int* size_out,
                         int* clique_out, char* errbuf, size_t errbuf_len) {
  if (!g) {
    set_err(errbuf, errbuf_len, "null argument");
    return MCS_ERR_INVALID_ARGUMENT;
  }
  return guarded(errbuf, errbuf_len, [&] {
    const mcs::TypeDecomposition& d = g->decomposition();
    if (type_index < 0 || type_index >= d.r) {
      set_err(errbuf, errbuf_len, "type index out of range");
      return MCS_ERR_INVALID_ARGUMENT;
    }
    if (size_out) *size_out = static_cast<int>(d.types[type_index].size());
    if (clique_out) {
      *clique_out = d.kinds[type_index] == mcs::ClassKind::Clique ? 1 : 0;
    }
    return MCS_OK;
  });
}

mcs_status mcs_type_of(const mcs_graph* g, int vertex, int* type_out,
                       char* errbuf, size_t errbuf_len) {
  if (!g || !type_out || vertex < 0 || vertex >= g->g.vertex_count()) {
    set_err(errbuf, errbuf_len, "bad vertex or null argument");
    return MCS_ERR_INVALID_ARGUMENT;
  }
  return guarded(errbuf, errbuf_len, [&] {
    *type_out = g->decomposition().type_of[vertex];
    return MCS_OK;
  });
}

mcs_status mcs_check_subset(const mcs_graph* g, const int* vertices,
                            int count, int* consistent_out, int* witness_out,
                            char* errbuf, size_t errbuf_len) {
  if (!g || !consistent_out || (count > 0 && !vertices) || count < 0) {
    set_err(errbuf, errbuf_len, "null argument");
    return MCS_ERR_INVALID_ARGUMENT;
  }
  for (int i = 0; i < count; i++) {
    if (vertices[i] < 0 || vertices[i] >= g->g.vertex_count()) {
      set_err(errbuf, errbuf_len,
              "vertex id " + std::to_string(vertices[i]) + " out of range");
      return MCS_ERR_INVALID_ARGUMENT;
    }
  }
  return guarded(errbuf, errbuf_len, [&] {
    mcs::VertexSet s(vertices, vertices + count);
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    mcs::Verdict v = mcs::is_consistent(g->g, g->distances(), s);
    *consistent_out = v.consistent ? 1 : 0;
    if (witness_out) *witness_out = v.witness ? *v.witness : -1;
    return MCS_OK;
  });
}

void mcs_solve_options_init(mcs_solve_options* options) {
  if (!options) return;
  options->method = "auto";
  options->threads = 1;
  options->timeout_ms = 0;
}

mcs_status mcs_solve(const mcs_graph* g, const mcs_solve_options* options,
                     mcs_solution** out, char* errbuf, size_t errbuf_len) {
  if (!g || !out) {
    set_err(errbuf, errbuf_len, "null argument");
    return MCS_ERR_INVALID_ARGUMENT;
  }
  return guarded(errbuf, errbuf_len, [&] {
    mcs::SolveMethod method = mcs::SolveMethod::Auto;
    mcs::SolveOptions opts;
    if (options) {
      if (options->method) method = mcs::parse_method(options->method);
      if (options->threads > 0) opts.threads = options->threads;
      if (options->timeout_ms > 0) {
        opts.deadline = std::chrono::steady_clock::now() +
                        std::chrono::milliseconds(options->timeout_ms);
      }
    }
    auto handle = std::make_unique<mcs_solution>();
    handle->sol = mcs::solve(g->g, g->distances(), method, opts);
    *out = handle.release();
    return MCS_OK;
  });
}

void mcs_solution_free(mcs_solution* s) { delete s; }

int mcs_solution_size(const mcs_solution* s) {
  return s ? s->sol.size() : -1;
}
const int* mcs_solution_vertices(const mcs_solution* s) {
  return s ? s->sol.vertices.data() : nullptr;
}
const char* mcs_solution_method(const mcs_solution* s) {
  return s ? mcs::method_name(s->sol.method) : "unknown";
}
int mcs_solution_verified(const mcs_solution* s) {
  return s && s->sol.verified ? 1 : 0;
}
int mcs_solution_optimal(const mcs_solution* s) {
  return s && s->sol.optimal ? 1 : 0;
}
int mcs_solution_timed_out(const mcs_solution* s) {
  return s && s->sol.timed_out ? 1 : 0;
}
uint64_t mcs_solution_explored(const mcs_solution* s) {
  return s ? s->sol.explored : 0;
}

}  // extern "C"
