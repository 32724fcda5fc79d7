#include "mcs/nd_solver.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "mcs/rng.hpp"

namespace mcs {

namespace {

// One placement unit: some or all vertices of one (type, color) cell.
// "one" always takes the smallest-id vertex; same-type same-color
// vertices are metrically interchangeable.
struct CellChoice {
  int type = 0;
  Color color = 0;
  bool all = false;
};

struct NdContext {
  const ColoredGraph& g;
  const DistanceMatrix& dist;
  const TypeDecomposition& decomp;

  // typedist[v][t] = d(v, T_t \ {v}); kInfDist when that set is empty.
  std::vector<std::vector<int>> typedist;
  // cells[t][a-1] = vertices of color a in type t, ascending.
  std::vector<std::vector<VertexSet>> cells;

  NdContext(const ColoredGraph& graph, const DistanceMatrix& d,
            const TypeDecomposition& dec)
      : g(graph), dist(d), decomp(dec) {
    const int n = g.vertex_count();
    typedist.assign(n, std::vector<int>(dec.r, kInfDist));
    for (Vertex v = 0; v < n; v++) {
      for (int t = 0; t < dec.r; t++) {
        for (Vertex u : dec.types[t]) {
          if (u != v) {
            typedist[v][t] = std::min(typedist[v][t], dist(v, u));
          }
        }
      }
    }
    cells.assign(dec.r, std::vector<VertexSet>(g.color_count()));
    for (Vertex v = 0; v < n; v++) {
      cells[dec.type_of[v]][g.color_of(v) - 1].push_back(v);
    }
  }

  const VertexSet& cell(int t, Color a) const { return cells[t][a - 1]; }

  int choice_size(const CellChoice& ch) const {
    return ch.all ? static_cast<int>(cell(ch.type, ch.color).size()) : 1;
  }

  // Distance from v to the vertices selected by one choice.
  int choice_distance(Vertex v, const CellChoice& ch) const {
    const VertexSet& members = cell(ch.type, ch.color);
    if (ch.all) {
      if (std::binary_search(members.begin(), members.end(), v)) return 0;
    } else if (members.front() == v) {
      return 0;
    }
    return typedist[v][ch.type];
  }

  int placement_distance(Vertex v, const std::vector<CellChoice>& p) const {
    int best = kInfDist;
    for (const CellChoice& ch : p) best = std::min(best, choice_distance(v, ch));
    return best;
  }

  void append_placement(const std::vector<CellChoice>& p, VertexSet& out) const {
    for (const CellChoice& ch : p) {
      const VertexSet& members = cell(ch.type, ch.color);
      if (ch.all) {
        out.insert(out.end(), members.begin(), members.end());
      } else {
        out.push_back(members.front());
      }
    }
  }

  // min over T1 u T2 types of d(v, T \ {v}).
  std::vector<int> nearest_active_type(const Partition3& partition) const {
    std::vector<int> out(g.vertex_count(), kInfDist);
    for (Vertex v = 0; v < g.vertex_count(); v++) {
      for (int t = 0; t < decomp.r; t++) {
        if (partition.roles[t] != TypeRole::T0) {
          out[v] = std::min(out[v], typedist[v][t]);
        }
      }
    }
    return out;
  }
};

// Enumerates one/all patterns for color `a` over the given types (all
// cells must be nonempty) and calls visit(choices). Patterns where a
// single-vertex cell is taken "all" are skipped as duplicates.
template <typename Visit>
void for_each_pattern(const NdContext& ctx, Color a,
                      const std::vector<int>& types, Visit&& visit) {
  const int t = static_cast<int>(types.size());
  std::vector<char> all(t, 0);
  while (true) {
    bool skip = false;
    std::vector<CellChoice> choices;
    for (int i = 0; i < t; i++) {
      if (all[i] && ctx.cell(types[i], a).size() == 1) {
        skip = true;
        break;
      }
      choices.push_back({types[i], a, all[i] != 0});
    }
    if (!skip) visit(choices);
    int i = t - 1;
    while (i >= 0 && all[i]) all[i--] = 0;
    if (i < 0) break;
    all[i] = 1;
  }
}

// Enumerates none/one/all patterns for color `a` over its nonempty T2
// cells, skipping the empty placement, in ascending mixed-radix order.
template <typename Visit>
void for_each_t2_pattern(const NdContext& ctx, Color a,
                         const std::vector<int>& t2_types, Visit&& visit) {
  std::vector<int> usable;
  for (int t : t2_types) {
    if (!ctx.cell(t, a).empty()) usable.push_back(t);
  }
  const int t = static_cast<int>(usable.size());
  if (t == 0) return;
  std::vector<int> mode(t, 0);  // 0 none, 1 one, 2 all
  while (true) {
    bool skip = true;  // skip the all-none placement
    std::vector<CellChoice> choices;
    bool dup = false;
    for (int i = 0; i < t; i++) {
      if (mode[i] == 0) continue;
      skip = false;
      if (mode[i] == 2 && ctx.cell(usable[i], a).size() == 1) {
        dup = true;
        break;
      }
      choices.push_back({usable[i], a, mode[i] == 2});
    }
    if (!skip && !dup) visit(choices);
    int i = t - 1;
    while (i >= 0 && mode[i] == 2) mode[i--] = 0;
    if (i < 0) break;
    mode[i]++;
  }
}

int placement_count(const NdContext& ctx, const std::vector<CellChoice>& p) {
  int count = 0;
  for (const CellChoice& ch : p) count += ctx.choice_size(ch);
  return count;
}

bool better_set(const VertexSet& a, const VertexSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

std::vector<std::pair<Partition3, OccAssignment>> enumerate_scenarios(
    const ColoredGraph& g, const TypeDecomposition& decomp) {
  const int r = decomp.r;
  const int c = g.color_count();
  const int k_max = std::min(2 * r, c);

  std::vector<char> multicolored(r, 0);
  for (int t = 0; t < r; t++) {
    std::set<Color> colors;
    for (Vertex v : decomp.types[t]) colors.insert(g.color_of(v));
    multicolored[t] = colors.size() >= 2;
  }

  std::vector<std::pair<Partition3, OccAssignment>> out;
  std::vector<int> roles(r, 0);  // 0=T0, 1=T1, 2=T2
  while (true) {
    bool valid = true;
    for (int t = 0; t < r && valid; t++) {
      if (roles[t] == 2 && !multicolored[t]) valid = false;
    }
    if (valid) {
      Partition3 partition;
      for (int t = 0; t < r; t++) {
        partition.roles.push_back(static_cast<TypeRole>(roles[t]));
      }
      for (int k = 1; k <= k_max; k++) {
        const std::uint32_t full = (1u << k) - 1;
        // Per-type label mask options.
        std::vector<std::vector<std::uint32_t>> options(r);
        for (int t = 0; t < r; t++) {
          if (roles[t] == 0) {
            options[t] = {0};
          } else if (roles[t] == 1) {
            for (int j = 0; j < k; j++) options[t].push_back(1u << j);
          } else {
            for (std::uint32_t m = 0; m <= full; m++) {
              if (__builtin_popcount(m) >= 2) options[t].push_back(m);
            }
            if (options[t].empty()) options[t] = {};
          }
        }
        bool impossible = false;
        for (int t = 0; t < r; t++) {
          if (options[t].empty()) impossible = true;
        }
        if (impossible) continue;

        std::vector<size_t> idx(r, 0);
        while (true) {
          std::uint32_t used = 0;
          for (int t = 0; t < r; t++) used |= options[t][idx[t]];
          if (used == full) {
            OccAssignment occ;
            occ.k = k;
            for (int t = 0; t < r; t++) {
              occ.type_labels.push_back(options[t][idx[t]]);
            }
            out.push_back({partition, std::move(occ)});
          }
          int t = r - 1;
          while (t >= 0 && idx[t] + 1 == options[t].size()) idx[t--] = 0;
          if (t < 0) break;
          idx[t]++;
        }
      }
    }
    int t = r - 1;
    while (t >= 0 && roles[t] == 2) roles[t--] = 0;
    if (t < 0) break;
    roles[t]++;
  }
  return out;
}

std::vector<LabelCoding> enumerate_labelings(int c, int k, LabelingMode mode,
                                             std::uint64_t seed, int trials,
                                             std::uint64_t budget) {
  if (c <= 0 || k <= 0) {
    throw Error(ErrorCode::InvalidParams, "enumerate_labelings: bad c or k");
  }
  std::vector<LabelCoding> out;
  if (mode == LabelingMode::Exhaustive) {
    double total = std::pow(static_cast<double>(k), c);
    if (total > static_cast<double>(budget)) {
      throw Error(ErrorCode::BudgetExceeded,
                  "exhaustive labelings k^c exceeds budget");
    }
    LabelCoding coding;
    coding.k = k;
    coding.label_of.assign(c, 0);
    while (true) {
      out.push_back(coding);
      int i = c - 1;
      while (i >= 0 && coding.label_of[i] == k - 1) coding.label_of[i--] = 0;
      if (i < 0) break;
      coding.label_of[i]++;
    }
  } else {
    SplitMix64 rng(seed);
    for (int t = 0; t < trials; t++) {
      LabelCoding coding;
      coding.k = k;
      for (int i = 0; i < c; i++) {
        coding.label_of.push_back(static_cast<int>(rng.below(k)));
      }
      out.push_back(std::move(coding));
    }
  }
  return out;
}

std::optional<VertexSet> best_for_label(const ColoredGraph& g,
                                        const DistanceMatrix& dist,
                                        const TypeDecomposition& decomp,
                                        const Partition3& partition,
                                        const OccAssignment& occ,
                                        const LabelCoding& coding, int label) {
  NdContext ctx(g, dist, decomp);
  const std::vector<int> nearest = ctx.nearest_active_type(partition);

  std::vector<int> label_types;  // types carrying this label
  std::vector<int> t2_types;
  for (int t = 0; t < decomp.r; t++) {
    if (occ.type_labels[t] & (1u << label)) label_types.push_back(t);
    if (partition.roles[t] == TypeRole::T2) t2_types.push_back(t);
  }
  std::vector<Color> label_colors;
  for (Color a = 1; a <= g.color_count(); a++) {
    if (coding.label_of[a - 1] == label) label_colors.push_back(a);
  }
  if (label_colors.empty() || label_types.empty()) return std::nullopt;

  std::optional<VertexSet> best;
  for (Color responsible : label_colors) {
    bool present_everywhere = true;
    for (int t : label_types) {
      if (ctx.cell(t, responsible).empty()) present_everywhere = false;
    }
    if (!present_everywhere) continue;

    for_each_pattern(ctx, responsible, label_types,
                     [&](const std::vector<CellChoice>& o) {
      // Every responsible-color vertex must be served by o at least as
      // closely as by the nearest occupied type, else some same-colored
      // vertex outside o ends up inconsistent.
      const VertexSet& resp_vertices = g.color_class(responsible);
      std::vector<int> resp_dist;
      for (size_t i = 0; i < resp_vertices.size(); i++) {
        int d = ctx.placement_distance(resp_vertices[i], o);
        if (d > nearest[resp_vertices[i]]) return;
        resp_dist.push_back(d);
      }

      VertexSet assembled;
      ctx.append_placement(o, assembled);
      int total = placement_count(ctx, o);
      bool feasible = true;

      for (Color other : label_colors) {
        if (other == responsible) continue;
        // Minimum placement of a non-responsible color over T2 cells,
        // subject to both consistency inequalities.
        std::optional<std::vector<CellChoice>> pick;
        int pick_count = 0;
        for_each_t2_pattern(ctx, other, t2_types,
                            [&](const std::vector<CellChoice>& alt) {
          for (Vertex v : g.color_class(other)) {
            if (ctx.placement_distance(v, alt) > nearest[v]) return;
          }
          for (size_t i = 0; i < resp_vertices.size(); i++) {
            if (resp_dist[i] > ctx.placement_distance(resp_vertices[i], alt)) {
              return;
            }
          }
          int count = placement_count(ctx, alt);
          if (!pick || count < pick_count) {
            pick = alt;
            pick_count = count;
          }
        });
        if (!pick) {
          feasible = false;
          break;
        }
        ctx.append_placement(*pick, assembled);
        total += pick_count;
      }
      if (!feasible) return;
      std::sort(assembled.begin(), assembled.end());
      assembled.erase(std::unique(assembled.begin(), assembled.end()),
                      assembled.end());
      (void)total;
      if (!best || better_set(assembled, *best)) best = std::move(assembled);
    });
  }
  return best;
}

std::vector<Color> minimal_responsible_set(const ColoredGraph& g,
                                           const DistanceMatrix& dist,
                                           const TypeDecomposition& decomp,
                                           const VertexSet& s) {
  if (!is_consistent(g, dist, s).consistent) {
    throw Error(ErrorCode::NotConsistent,
                "responsible set requires a consistent subset");
  }
  std::set<Color> chosen;
  std::vector<std::set<Color>> type_colors(decomp.r);
  for (Vertex v : s) type_colors[decomp.type_of[v]].insert(g.color_of(v));

  for (int t = 0; t < decomp.r; t++) {
    if (type_colors[t].size() == 1) chosen.insert(*type_colors[t].begin());
  }
  for (int t = 0; t < decomp.r; t++) {
    if (type_colors[t].size() < 2) continue;
    int have = 0;
    for (Color a : type_colors[t]) {
      if (chosen.count(a)) have++;
    }
    for (Color a : type_colors[t]) {
      if (have >= 2) break;
      if (!chosen.count(a)) {
        chosen.insert(a);
        have++;
      }
    }
  }
  return {chosen.begin(), chosen.end()};
}

Solution solve_nd_scenarios(const ColoredGraph& g, const DistanceMatrix& dist,
                            const TypeDecomposition& decomp, LabelingMode mode,
                            std::uint64_t seed, int trials,
                            const NdOptions& options) {
  if (decomp.r > options.r_limit) {
    throw Error(ErrorCode::ParameterTooLarge,
                "neighborhood diversity " + std::to_string(decomp.r) +
                    " exceeds limit " + std::to_string(options.r_limit));
  }
  Solution sol;
  sol.method = Method::Nd;

  std::map<int, std::vector<LabelCoding>> codings_by_k;
  std::optional<VertexSet> best;
  for (const auto& [partition, occ] : enumerate_scenarios(g, decomp)) {
    auto it = codings_by_k.find(occ.k);
    if (it == codings_by_k.end()) {
      int t = trials;
      if (mode == LabelingMode::Random && t <= 0) {
        // k^k ln(1/delta) trials for delta = 0.01.
        t = static_cast<int>(
            std::ceil(std::pow(occ.k, occ.k) * std::log(100.0)));
      }
      it = codings_by_k
               .emplace(occ.k, enumerate_labelings(g.color_count(), occ.k,
                                                   mode, seed, t))
               .first;
    }
    for (const LabelCoding& coding : it->second) {
      sol.explored++;
      VertexSet assembled;
      bool feasible = true;
      for (int label = 0; label < occ.k; label++) {
        auto part = best_for_label(g, dist, decomp, partition, occ, coding,
                                   label);
        if (!part) {
          feasible = false;
          break;
        }
        assembled.insert(assembled.end(), part->begin(), part->end());
      }
      if (!feasible) continue;
      std::sort(assembled.begin(), assembled.end());
      assembled.erase(std::unique(assembled.begin(), assembled.end()),
                      assembled.end());
      if (!is_consistent(g, dist, assembled).consistent) continue;
      if (!best || better_set(assembled, *best)) best = std::move(assembled);
    }
  }
  if (!best) {
    // Random labelings may miss every nice coding; fall back to the
    // always-consistent full vertex set.
    sol.vertices.resize(g.vertex_count());
    std::iota(sol.vertices.begin(), sol.vertices.end(), 0);
    sol.verified = true;
    sol.optimal = false;
    return sol;
  }
  sol.vertices = std::move(*best);
  sol.verified = true;
  sol.optimal = mode == LabelingMode::Exhaustive;
  return sol;
}

namespace {

// Responsible-color placement option for the coverage dynamic program.
struct RespOption {
  std::vector<CellChoice> choices;
  int cost = 0;
  std::uint32_t type_set = 0;  // types occupied
};

}  // namespace

Solution solve_nd(const ColoredGraph& g, const DistanceMatrix& dist,
                  const TypeDecomposition& decomp, const NdOptions& options) {
  if (decomp.r > options.r_limit) {
    throw Error(ErrorCode::ParameterTooLarge,
                "neighborhood diversity " + std::to_string(decomp.r) +
                    " exceeds limit " + std::to_string(options.r_limit));
  }
  const int r = decomp.r;
  const int c = g.color_count();
  const int n = g.vertex_count();
  NdContext ctx(g, dist, decomp);

  std::vector<char> multicolored(r, 0);
  for (int t = 0; t < r; t++) {
    std::set<Color> colors;
    for (Vertex v : decomp.types[t]) colors.insert(g.color_of(v));
    multicolored[t] = colors.size() >= 2;
  }

  Solution sol;
  sol.method = Method::Nd;
  std::optional<VertexSet> best;
  bool expired = false;

  std::vector<int> roles(r, 0);
  while (true) {  // all 3-partitions of the types
    if (options.deadline &&
        std::chrono::steady_clock::now() > *options.deadline) {
      expired = true;
      break;
    }
    bool valid = true;
    bool any_active = false;
    for (int t = 0; t < r; t++) {
      if (roles[t] == 2 && !multicolored[t]) valid = false;
      if (roles[t] != 0) any_active = true;
    }
    if (valid && any_active) {
      sol.explored++;
      Partition3 partition;
      for (int t = 0; t < r; t++) {
        partition.roles.push_back(static_cast<TypeRole>(roles[t]));
      }
      std::vector<int> t1_types, t2_types, active_types;
      for (int t = 0; t < r; t++) {
        if (roles[t] == 1) t1_types.push_back(t);
        if (roles[t] == 2) t2_types.push_back(t);
        if (roles[t] != 0) active_types.push_back(t);
      }
      const std::vector<int> nearest = ctx.nearest_active_type(partition);

      // Cheapest valid placement of each color as a non-responsible
      // color: T2 cells only, every same-colored vertex served within
      // its nearest active type distance.
      std::vector<std::optional<std::vector<CellChoice>>> fallback(c + 1);
      std::vector<int> fallback_cost(c + 1, kInfDist);
      for (Color a = 1; a <= c; a++) {
        for_each_t2_pattern(ctx, a, t2_types,
                            [&](const std::vector<CellChoice>& alt) {
          for (Vertex v : g.color_class(a)) {
            if (ctx.placement_distance(v, alt) > nearest[v]) return;
          }
          int count = placement_count(ctx, alt);
          if (count < fallback_cost[a]) {
            fallback_cost[a] = count;
            fallback[a] = alt;
          }
        });
      }

      // Responsible options per color: occupy a nonempty set of active
      // types, one-or-all per cell, with every same-colored vertex
      // served within its nearest active type distance.
      std::vector<std::vector<RespOption>> resp(c + 1);
      const int active = static_cast<int>(active_types.size());
      for (Color a = 1; a <= c; a++) {
        for (std::uint32_t sub = 1; sub < (1u << active); sub++) {
          std::vector<int> tau;
          bool ok = true;
          for (int i = 0; i < active && ok; i++) {
            if (sub & (1u << i)) {
              if (ctx.cell(active_types[i], a).empty()) {
                ok = false;
              } else {
                tau.push_back(active_types[i]);
              }
            }
          }
          if (!ok) continue;
          for_each_pattern(ctx, a, tau, [&](const std::vector<CellChoice>& o) {
            for (Vertex u : g.color_class(a)) {
              if (ctx.placement_distance(u, o) > nearest[u]) return;
            }
            RespOption option;
            option.choices = o;
            option.cost = placement_count(ctx, o);
            for (int t : tau) option.type_set |= 1u << t;
            resp[a].push_back(std::move(option));
          });
        }
      }

      // Coverage DP over colors. State: per T1 type 0/1 (exactly one
      // responsible color), per T2 type 0/1/2+ (at least two), plus the
      // responsible-color count (at most 2r).
      const int k_max = std::min(2 * r, c);
      std::vector<int> stride(r, 0);
      int coverage_states = 1;
      for (int t : t1_types) {
        stride[t] = coverage_states;
        coverage_states *= 2;
      }
      for (int t : t2_types) {
        stride[t] = coverage_states;
        coverage_states *= 3;
      }
      const int states = coverage_states * (k_max + 1);
      auto apply = [&](int state, std::uint32_t type_set) -> int {
        int coverage = state % coverage_states;
        int used = state / coverage_states;
        if (used + 1 > k_max) return -1;
        for (int t : t1_types) {
          if (type_set & (1u << t)) {
            if ((coverage / stride[t]) % 2 == 1) return -1;  // double cover
            coverage += stride[t];
          }
        }
        for (int t : t2_types) {
          if (type_set & (1u << t)) {
            if ((coverage / stride[t]) % 3 < 2) coverage += stride[t];
          }
        }
        return (used + 1) * coverage_states + coverage;
      };

      const int unreachable = kInfDist;
      std::vector<std::vector<int>> dp(c + 1,
                                       std::vector<int>(states, unreachable));
      // choice[a][state]: -1 non-responsible, else responsible option id.
      std::vector<std::vector<int>> choice(c + 1, std::vector<int>(states, -2));
      std::vector<std::vector<int>> from(c + 1, std::vector<int>(states, -1));
      dp[0][0] = 0;
      for (Color a = 1; a <= c; a++) {
        for (int state = 0; state < states; state++) {
          const int base = dp[a - 1][state];
          if (base == unreachable) continue;
          if (fallback_cost[a] != kInfDist &&
              base + fallback_cost[a] < dp[a][state]) {
            dp[a][state] = base + fallback_cost[a];
            choice[a][state] = -1;
            from[a][state] = state;
          }
          for (size_t o = 0; o < resp[a].size(); o++) {
            int next = apply(state, resp[a][o].type_set);
            if (next < 0) continue;
            if (base + resp[a][o].cost < dp[a][next]) {
              dp[a][next] = base + resp[a][o].cost;
              choice[a][next] = static_cast<int>(o);
              from[a][next] = state;
            }
          }
        }
      }

      int full_coverage = 0;
      for (int t : t1_types) full_coverage += stride[t];
      for (int t : t2_types) full_coverage += 2 * stride[t];
      int best_state = -1;
      int best_cost = unreachable;
      for (int used = 1; used <= k_max; used++) {
        int state = used * coverage_states + full_coverage;
        if (dp[c][state] < best_cost) {
          best_cost = dp[c][state];
          best_state = state;
        }
      }
      if (best_state >= 0 &&
          (!best || best_cost <= static_cast<int>(best->size()))) {
        VertexSet assembled;
        int state = best_state;
        for (Color a = c; a >= 1; a--) {
          int ch = choice[a][state];
          if (ch == -1) {
            ctx.append_placement(*fallback[a], assembled);
          } else {
            ctx.append_placement(resp[a][ch].choices, assembled);
          }
          state = from[a][state];
        }
        std::sort(assembled.begin(), assembled.end());
        assembled.erase(std::unique(assembled.begin(), assembled.end()),
                        assembled.end());
        if (static_cast<int>(assembled.size()) != best_cost ||
            !is_consistent(g, dist, assembled).consistent) {
          throw Error(ErrorCode::Internal,
                      "nd candidate failed certification; solver bug");
        }
        if (!best || better_set(assembled, *best)) best = std::move(assembled);
      }
    }
    int t = r - 1;
    while (t >= 0 && roles[t] == 2) roles[t--] = 0;
    if (t < 0) break;
    roles[t]++;
  }

  if (expired) {
    sol.timed_out = true;
    sol.optimal = false;
    if (best) {
      sol.vertices = std::move(*best);
    } else {
      sol.vertices.resize(n);
      std::iota(sol.vertices.begin(), sol.vertices.end(), 0);
    }
    sol.verified = true;
    return sol;
  }
  if (!best) {
    throw Error(ErrorCode::Internal,
                "no nd partition produced a candidate; solver bug");
  }
  sol.vertices = std::move(*best);
  sol.verified = true;
  return sol;
}

}  // namespace mcs
