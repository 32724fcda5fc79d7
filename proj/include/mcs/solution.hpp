#pragma once

#include <cstdint>
#include <string>

#include "mcs/graph.hpp"

namespace mcs {

enum class Method { Oracle, Vc, Nd };

inline const char* method_name(Method m) {
  switch (m) {
    case Method::Oracle: return "oracle";
    case Method::Vc: return "vc";
    case Method::Nd: return "nd";
  }
  return "unknown";
}

struct Solution {
  VertexSet vertices;
  Method method = Method::Oracle;
  bool verified = false;
  bool optimal = true;   // false for timeout partials / random labeling mode
  bool timed_out = false;
  std::uint64_t explored = 0;  // guesses / partitions / subsets examined

  int size() const { return static_cast<int>(vertices.size()); }
};

}  // namespace mcs
