#include "mcs/solve.hpp"

#include <string>

namespace mcs {

SolveMethod parse_method(const std::string& name) {
  if (name == "auto") return SolveMethod::Auto;
  if (name == "brute") return SolveMethod::Brute;
  if (name == "vc") return SolveMethod::Vc;
  if (name == "nd") return SolveMethod::Nd;
  throw Error(ErrorCode::InvalidParams, "unknown method '" + name + "'");
}

const char* solve_method_name(SolveMethod m) {
  switch (m) {
    case SolveMethod::Auto: return "auto";
    case SolveMethod::Brute: return "brute";
    case SolveMethod::Vc: return "vc";
    case SolveMethod::Nd: return "nd";
  }
  return "unknown";
}

namespace {

Solution run_vc(const ColoredGraph& g, const DistanceMatrix& dist,
                const SolveOptions& options) {
  VertexCoverResult cover;
  try {
    cover = minimum_vertex_cover(g, options.k_limit);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::BudgetExceeded) {
      throw Error(ErrorCode::ParameterTooLarge,
                  "vertex cover exceeds limit " +
                      std::to_string(options.k_limit));
    }
    throw;
  }
  VcOptions vc;
  vc.k_limit = options.k_limit;
  vc.threads = options.threads;
  vc.deadline = options.deadline;
  return solve_vc(g, dist, cover, vc);
}

Solution run_nd(const ColoredGraph& g, const DistanceMatrix& dist,
                const SolveOptions& options) {
  TypeDecomposition decomp = neighborhood_decomposition(g);
  NdOptions nd;
  nd.r_limit = options.r_limit;
  nd.deadline = options.deadline;
  return solve_nd(g, dist, decomp, nd);
}

}  // namespace

Solution solve(const ColoredGraph& g, const DistanceMatrix& dist,
               SolveMethod method, const SolveOptions& options) {
  switch (method) {
    case SolveMethod::Brute:
      return brute_force_mcs(g, dist, options.brute_limit, options.deadline);
    case SolveMethod::Vc:
      return run_vc(g, dist, options);
    case SolveMethod::Nd:
      return run_nd(g, dist, options);
    case SolveMethod::Auto:
      break;
  }
  if (g.vertex_count() <= options.auto_brute_limit) {
    return brute_force_mcs(g, dist, options.brute_limit, options.deadline);
  }
  bool cover_fits = true;
  try {
    return run_vc(g, dist, options);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ParameterTooLarge) throw;
    cover_fits = false;
  }
  (void)cover_fits;
  TypeDecomposition decomp = neighborhood_decomposition(g);
  if (decomp.r > options.r_limit) {
    throw Error(ErrorCode::ParameterTooLarge,
                "no solver applicable: n=" + std::to_string(g.vertex_count()) +
                    ", vertex cover > " + std::to_string(options.k_limit) +
                    ", neighborhood diversity " + std::to_string(decomp.r) +
                    " > " + std::to_string(options.r_limit));
  }
  NdOptions nd;
  nd.r_limit = options.r_limit;
  nd.deadline = options.deadline;
  return solve_nd(g, dist, decomp, nd);
}

}  // namespace mcs
