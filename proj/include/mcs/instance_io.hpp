#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mcs/graph.hpp"
#include "mcs/rng.hpp"

namespace mcs {

// Instance text format:
//   # comment lines anywhere
//   p mcs <n> <m> <c>
//   v <id> <color>     (n lines, ids 1-based, colors 1..c)
//   e <u> <v>          (m lines, 1-based endpoints)
ColoredGraph parse_instance(const std::string& text);

// Canonical form: header, vertices ascending, edges ascending
// lexicographic; ASCII, single spaces, "\n" endings, no comments.
std::string serialize_instance(const ColoredGraph& g);

// Connected Erdos-Renyi draw; resamples until connected.
ColoredGraph generate_gnp_connected(int n, double p, int c,
                                    std::uint64_t seed);

// Graph whose minimum vertex cover is at most k: vertices 0..k-1 form
// the planted cover, the rest stay independent.
ColoredGraph generate_planted_vc(int k, int n, int c, double density,
                                 std::uint64_t seed);

// Graph with at most r twin classes of the given sizes, connected
// all-or-nothing type pattern.
ColoredGraph generate_planted_nd(const std::vector<int>& sizes, int c,
                                 double density, std::uint64_t seed);

}  // namespace mcs
