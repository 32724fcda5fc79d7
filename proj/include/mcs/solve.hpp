#pragma once

#include "mcs/nd_solver.hpp"
#include "mcs/vc_solver.hpp"

namespace mcs {

enum class SolveMethod { Auto, Brute, Vc, Nd };

SolveMethod parse_method(const std::string& name);  // InvalidParams on junk
const char* solve_method_name(SolveMethod m);

struct SolveOptions {
  int threads = 1;
  Deadline deadline;
  int brute_limit = kDefaultBruteLimit;
  int k_limit = kDefaultVcLimit;
  int r_limit = kDefaultNdLimit;
  // Auto picks brute for instances up to this many vertices.
  int auto_brute_limit = 14;
};

// Runs the requested solver; Auto picks by computed parameters (brute
// for small n, else vc when the cover is small, else nd when the
// diversity is small, else ParameterTooLarge listing both).
Solution solve(const ColoredGraph& g, const DistanceMatrix& dist,
               SolveMethod method, const SolveOptions& options = {});

}  // namespace mcs
