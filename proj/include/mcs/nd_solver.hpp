#pragma once

#include <cstdint>
#include <optional>

#include "mcs/oracle.hpp"
#include "mcs/structural.hpp"

namespace mcs {

inline constexpr int kDefaultNdLimit = 4;
inline constexpr std::uint64_t kDefaultLabelingBudget = 1000000;

enum class TypeRole { T0, T1, T2 };

// 3-partition of the twin classes with respect to a hypothetical
// solution: untouched / single-color / multi-color.
struct Partition3 {
  std::vector<TypeRole> roles;  // one per type
};

// Per-type label sets (the occurrence function, stored transposed).
struct OccAssignment {
  int k = 0;                                // number of labels
  std::vector<std::uint32_t> type_labels;   // bitmask of labels per type
};

// Assignment of every input color to one of k labels.
struct LabelCoding {
  int k = 0;
  std::vector<int> label_of;  // index color-1 -> label in 0..k-1
};

enum class LabelingMode { Exhaustive, Random };

struct NdOptions {
  int r_limit = kDefaultNdLimit;
  Deadline deadline;
};

// All valid (partition, occ) scenarios: T0 types carry no label, T1
// types exactly one, T2 types at least two, every label used, T2 types
// restricted to multi-colored classes. Deterministic order.
std::vector<std::pair<Partition3, OccAssignment>> enumerate_scenarios(
    const ColoredGraph& g, const TypeDecomposition& decomp);

// Exhaustive mode: every map [c] -> [k] exactly once (BudgetExceeded
// when k^c exceeds the budget). Random mode: `trials` seeded draws.
std::vector<LabelCoding> enumerate_labelings(
    int c, int k, LabelingMode mode, std::uint64_t seed = 0, int trials = 0,
    std::uint64_t budget = kDefaultLabelingBudget);

// Smallest vertex set for one label class under the caution constraints
// and the placement inequalities; nullopt when no responsible color in
// the class admits a complete assignment.
std::optional<VertexSet> best_for_label(const ColoredGraph& g,
                                        const DistanceMatrix& dist,
                                        const TypeDecomposition& decomp,
                                        const Partition3& partition,
                                        const OccAssignment& occ,
                                        const LabelCoding& coding, int label);

// Inclusion-minimal responsible color set extracted from a consistent
// subset; |R| <= 2r. Throws NotConsistent otherwise.
std::vector<Color> minimal_responsible_set(const ColoredGraph& g,
                                           const DistanceMatrix& dist,
                                           const TypeDecomposition& decomp,
                                           const VertexSet& s);

// Literal scenario sweep: scenarios x labelings x per-label selection,
// every assembled candidate certified. Exponential in c; intended for
// small instances and cross-validation.
Solution solve_nd_scenarios(const ColoredGraph& g, const DistanceMatrix& dist,
                            const TypeDecomposition& decomp,
                            LabelingMode mode = LabelingMode::Exhaustive,
                            std::uint64_t seed = 0, int trials = 0,
                            const NdOptions& options = {});

// Default solver: same optimum as the exhaustive scenario sweep,
// computed by a per-partition selection of responsible colors and
// placements (coverage dynamic program). Deterministic and polynomial
// in the number of colors.
Solution solve_nd(const ColoredGraph& g, const DistanceMatrix& dist,
                  const TypeDecomposition& decomp,
                  const NdOptions& options = {});

}  // namespace mcs
