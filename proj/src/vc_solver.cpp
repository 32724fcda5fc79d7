#include "mcs/vc_solver.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <numeric>
#include <string>
#include <thread>

namespace mcs {

namespace {

// D entries fit in 4 bits for k <= 6 (values 0..2k-1 <= 11).
std::vector<std::uint32_t> enumerate_distance_codes(
    const DistanceMatrix& dist, const VertexSet& cover) {
  const int k = static_cast<int>(cover.size());
  const int max_d = 2 * k - 1;
  std::vector<std::uint32_t> codes;
  std::vector<int> d(k, 0);
  while (true) {
    // Triangle feasibility: |d_i - d_j| <= d(u_i, u_j).
    bool feasible = true;
    for (int i = 0; i < k && feasible; i++) {
      for (int j = i + 1; j < k; j++) {
        if (std::abs(d[i] - d[j]) > dist(cover[i], cover[j])) {
          feasible = false;
          break;
        }
      }
    }
    if (feasible) {
      std::uint32_t code = 0;
      for (int i = 0; i < k; i++) code |= static_cast<std::uint32_t>(d[i]) << (4 * i);
      codes.push_back(code);
    }
    int i = k - 1;
    while (i >= 0 && d[i] == max_d) d[i--] = 0;
    if (i < 0) break;
    d[i]++;
  }
  return codes;
}

std::vector<int> decode_distances(std::uint32_t code, int k) {
  std::vector<int> d(k);
  for (int i = 0; i < k; i++) d[i] = static_cast<int>((code >> (4 * i)) & 0xf);
  return d;
}

VcGuess make_guess(const VertexSet& cover, const std::vector<int>& d,
                   std::uint32_t m1_mask, const std::vector<int>& free_pos) {
  VcGuess guess;
  guess.distances = d;
  std::vector<char> in_m1(cover.size(), 0);
  for (size_t b = 0; b < free_pos.size(); b++) {
    if (m1_mask & (1u << b)) in_m1[free_pos[b]] = 1;
  }
  for (size_t i = 0; i < cover.size(); i++) {
    if (d[i] == 0) {
      guess.m0.push_back(cover[i]);
    } else if (in_m1[i]) {
      guess.m1.push_back(cover[i]);
    } else {
      guess.mx.push_back(cover[i]);
    }
  }
  return guess;
}

bool contains(const VertexSet& s, Vertex v) {
  return std::binary_search(s.begin(), s.end(), v);
}

struct Candidate {
  bool valid = false;
  VertexSet vertices;

  // Canonical order: smaller size first, then lexicographic.
  bool better_than(const Candidate& other) const {
    if (!valid) return false;
    if (!other.valid) return true;
    if (vertices.size() != other.vertices.size()) {
      return vertices.size() < other.vertices.size();
    }
    return vertices < other.vertices;
  }
};

}  // namespace

std::vector<VcGuess> enumerate_guesses(const ColoredGraph& g,
                                       const DistanceMatrix& dist,
                                       const VertexCoverResult& cover) {
  (void)g;
  const int k = cover.k;
  std::vector<VcGuess> out;
  for (std::uint32_t code : enumerate_distance_codes(dist, cover.cover)) {
    std::vector<int> d = decode_distances(code, k);
    std::vector<int> free_pos;
    for (int i = 0; i < k; i++) {
      if (d[i] != 0) free_pos.push_back(i);
    }
    const std::uint32_t m1_count = 1u << free_pos.size();
    for (std::uint32_t mask = 0; mask < m1_count; mask++) {
      out.push_back(make_guess(cover.cover, d, mask, free_pos));
    }
  }
  return out;
}

std::optional<DerivedSets> derive_sets(const ColoredGraph& g,
                                       const DistanceMatrix& dist,
                                       const VertexCoverResult& cover,
                                       const VcGuess& guess) {
  const int n = g.vertex_count();
  const int k = cover.k;
  const VertexSet& m = cover.cover;

  DerivedSets derived;
  derived.extended.assign(n, kInfDist);
  std::vector<int> cover_pos(n, -1);
  for (int i = 0; i < k; i++) {
    cover_pos[m[i]] = i;
    derived.extended[m[i]] = guess.distances[i];
  }

  std::vector<char> in_i_out(n, 0);
  for (Vertex v : cover.independent) {
    for (int i = 0; i < k; i++) {
      if (dist(m[i], v) <= guess.distances[i] - 1) {
        in_i_out[v] = 1;
        break;
      }
    }
    if (in_i_out[v]) derived.i_out.push_back(v);
    int dmin = kInfDist;
    for (Vertex w : g.neighbors(v)) dmin = std::min(dmin, guess.distances[cover_pos[w]]);
    derived.extended[v] = dmin + 1;
  }

  std::vector<char> excluded(n, 0);  // Mx u M1 u I_out
  for (Vertex w : guess.mx) excluded[w] = 1;
  for (Vertex w : guess.m1) excluded[w] = 1;
  for (Vertex w : derived.i_out) excluded[w] = 1;

  std::vector<char> in_i_in(n, 0);
  for (Vertex v : cover.independent) {
    bool color_seen = false;
    for (Vertex w = 0; w < n; w++) {
      if (w != v && !excluded[w] && dist(v, w) == derived.extended[v] &&
          g.color_of(w) == g.color_of(v)) {
        color_seen = true;
        break;
      }
    }
    if (!color_seen) {
      if (in_i_out[v]) return std::nullopt;  // contradictory guess
      in_i_in[v] = 1;
      derived.i_in.push_back(v);
    }
  }

  // Satisfaction against the forced part M0 u I_in at the guessed
  // distance. Forced vertices are their own nearest neighbor.
  std::vector<char> forced(n, 0);
  for (Vertex w : guess.m0) forced[w] = 1;
  for (Vertex w : derived.i_in) forced[w] = 1;
  for (Vertex v = 0; v < n; v++) {
    if (forced[v]) continue;
    bool satisfied = false;
    for (Vertex w = 0; w < n; w++) {
      if (forced[w] && dist(v, w) == derived.extended[v] &&
          g.color_of(w) == g.color_of(v)) {
        satisfied = true;
        break;
      }
    }
    if (!satisfied) derived.unsatisfied[g.color_of(v)].push_back(v);
  }
  return derived;
}

std::optional<VertexSet> per_color_optimal(const ColoredGraph& g,
                                           const DistanceMatrix& dist,
                                           const VertexCoverResult& cover,
                                           const VcGuess& guess,
                                           const DerivedSets& derived,
                                           Color a) {
  auto it = derived.unsatisfied.find(a);
  if (it == derived.unsatisfied.end() || it->second.empty()) {
    return VertexSet{};
  }
  const VertexSet& demand = it->second;

  std::vector<char> in_i(g.vertex_count(), 0);
  for (Vertex v : cover.independent) in_i[v] = 1;
  auto in_i_out = [&](Vertex v) { return contains(derived.i_out, v); };
  auto in_i_in = [&](Vertex v) { return contains(derived.i_in, v); };

  // Boundary vertices that can supply a color-a witness.
  std::vector<char> supplies(g.vertex_count(), 0);
  for (Vertex w : guess.m1) {
    for (Vertex x : g.neighbors(w)) {
      if (in_i[x] && !in_i_out(x) && g.color_of(x) == a) {
        supplies[w] = 1;
        break;
      }
    }
  }

  SetSystem witness_system;
  witness_system.universe = guess.m1;
  for (Vertex u : demand) {
    std::vector<int> witnesses;
    for (Vertex w : guess.m1) {
      if (supplies[w] && dist(u, w) == derived.extended[u] - 1) {
        witnesses.push_back(w);
      }
    }
    if (witnesses.empty()) return std::nullopt;
    witness_system.family.push_back(std::move(witnesses));
  }

  std::optional<VertexSet> best;
  for (const std::vector<int>& x_a :
       enumerate_min_hitting_sets(witness_system)) {
    SetSystem placement;
    placement.universe = cover.independent;
    bool degenerate = false;
    for (int w : x_a) {
      std::vector<int> member;
      for (Vertex x : g.neighbors(w)) {
        if (in_i[x] && !in_i_in(x) && !in_i_out(x) && g.color_of(x) == a) {
          member.push_back(x);
        }
      }
      if (member.empty()) {
        degenerate = true;
        break;
      }
      placement.family.push_back(std::move(member));
    }
    if (degenerate) continue;
    auto s_a = min_hitting_set(placement);
    if (!s_a) continue;
    // Demand guard; holds by construction for genuine hitting sets.
    bool ok = true;
    for (Vertex u : demand) {
      int d = kInfDist;
      for (int v : *s_a) d = std::min(d, dist(u, v));
      if (d > derived.extended[u]) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    VertexSet candidate(s_a->begin(), s_a->end());
    if (!best || candidate.size() < best->size() ||
        (candidate.size() == best->size() && candidate < *best)) {
      best = std::move(candidate);
    }
  }
  return best;
}

namespace {

Candidate evaluate_guess(const ColoredGraph& g, const DistanceMatrix& dist,
                         const VertexCoverResult& cover, const VcGuess& guess) {
  Candidate candidate;
  auto derived = derive_sets(g, dist, cover, guess);
  if (!derived) return candidate;

  VertexSet s = guess.m0;
  s.insert(s.end(), derived->i_in.begin(), derived->i_in.end());
  for (const auto& [color, demand] : derived->unsatisfied) {
    auto s_a = per_color_optimal(g, dist, cover, guess, *derived, color);
    if (!s_a) return candidate;
    s.insert(s.end(), s_a->begin(), s_a->end());
  }
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());

  for (int i = 0; i < cover.k; i++) {
    if (distance_to_set(dist, cover.cover[i], s) != guess.distances[i]) {
      return candidate;
    }
  }
  if (!is_consistent(g, dist, s).consistent) return candidate;
  candidate.valid = true;
  candidate.vertices = std::move(s);
  return candidate;
}

}  // namespace

Solution solve_vc(const ColoredGraph& g, const DistanceMatrix& dist,
                  const VertexCoverResult& cover, const VcOptions& options) {
  if (cover.k > options.k_limit) {
    throw Error(ErrorCode::ParameterTooLarge,
                "vertex cover size " + std::to_string(cover.k) +
                    " exceeds limit " + std::to_string(options.k_limit));
  }
  const int k = cover.k;

  // Edgeless single-vertex graph: the only consistent subset is {0}.
  if (k == 0) {
    Solution sol;
    sol.method = Method::Vc;
    sol.vertices = {0};
    sol.verified = is_consistent(g, dist, sol.vertices).consistent;
    sol.explored = 1;
    return sol;
  }

  std::vector<std::uint32_t> codes = enumerate_distance_codes(dist, cover.cover);
  const int threads =
      std::max(1, std::min<int>(options.threads, static_cast<int>(codes.size())));

  std::vector<Candidate> best_per_thread(threads);
  std::vector<std::uint64_t> explored_per_thread(threads, 0);
  std::atomic<bool> expired{false};

  auto work = [&](int t) {
    Candidate best;
    std::uint64_t explored = 0;
    for (size_t idx = t; idx < codes.size(); idx += threads) {
      if (options.deadline &&
          std::chrono::steady_clock::now() > *options.deadline) {
        expired.store(true);
        break;
      }
      std::vector<int> d = decode_distances(codes[idx], k);
      std::vector<int> free_pos;
      for (int i = 0; i < k; i++) {
        if (d[i] != 0) free_pos.push_back(i);
      }
      const std::uint32_t m1_count = 1u << free_pos.size();
      for (std::uint32_t mask = 0; mask < m1_count; mask++) {
        VcGuess guess = make_guess(cover.cover, d, mask, free_pos);
        explored++;
        Candidate candidate = evaluate_guess(g, dist, cover, guess);
        if (candidate.better_than(best)) best = std::move(candidate);
      }
    }
    best_per_thread[t] = std::move(best);
    explored_per_thread[t] = explored;
  };

  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; t++) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }

  Candidate best;
  std::uint64_t explored = 0;
  for (int t = 0; t < threads; t++) {
    if (best_per_thread[t].better_than(best)) best = best_per_thread[t];
    explored += explored_per_thread[t];
  }

  Solution sol;
  sol.method = Method::Vc;
  sol.explored = explored;
  if (!best.valid) {
    if (expired.load()) {
      sol.vertices.resize(g.vertex_count());
      std::iota(sol.vertices.begin(), sol.vertices.end(), 0);
      sol.verified = true;
      sol.optimal = false;
      sol.timed_out = true;
      return sol;
    }
    throw Error(ErrorCode::NoFeasibleGuess,
                "no guess produced a candidate; this is a solver bug");
  }
  sol.vertices = std::move(best.vertices);
  sol.verified = true;
  sol.optimal = !expired.load();
  sol.timed_out = expired.load();
  return sol;
}

}  // namespace mcs
