#include "mcs/hitting_set.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

namespace mcs {

namespace {

// Deduplicate and drop superset members; a hitting set of the reduced
// family hits the original and minimality is unchanged.
std::vector<std::vector<int>> reduce_family(
    const std::vector<std::vector<int>>& family) {
  std::vector<std::vector<int>> sorted;
  sorted.reserve(family.size());
  for (const auto& f : family) {
    auto copy = f;
    std::sort(copy.begin(), copy.end());
    copy.erase(std::unique(copy.begin(), copy.end()), copy.end());
    sorted.push_back(std::move(copy));
  }
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return a.size() < b.size(); });
  std::vector<std::vector<int>> kept;
  for (auto& f : sorted) {
    bool redundant = false;
    for (const auto& k : kept) {
      if (std::includes(f.begin(), f.end(), k.begin(), k.end())) {
        redundant = true;
        break;
      }
    }
    if (!redundant) kept.push_back(std::move(f));
  }
  return kept;
}

}  // namespace

std::optional<std::vector<int>> min_hitting_set(const SetSystem& sys,
                                                int family_limit) {
  auto family = reduce_family(sys.family);
  const int m = static_cast<int>(family.size());
  if (m > family_limit) {
    throw Error(ErrorCode::FamilyTooLarge,
                "family of size " + std::to_string(m) + " exceeds limit " +
                    std::to_string(family_limit));
  }
  if (family.empty()) return std::vector<int>{};
  for (const auto& f : family) {
    if (f.empty()) return std::nullopt;
  }

  std::vector<int> elements = sys.universe;
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()),
                 elements.end());

  // Per-element signature: which family members it hits.
  std::vector<uint32_t> sig;
  std::vector<int> element_of;
  for (int e : elements) {
    uint32_t mask = 0;
    for (int j = 0; j < m; j++) {
      if (std::binary_search(family[j].begin(), family[j].end(), e)) {
        mask |= 1u << j;
      }
    }
    if (mask != 0) {
      sig.push_back(mask);
      element_of.push_back(e);
    }
  }

  const uint32_t full = (m == 32) ? ~0u : ((1u << m) - 1);
  const int unset = -1;
  std::vector<int> dp(full + 1, unset);
  dp[0] = 0;
  for (uint32_t mask = 1; mask <= full; mask++) {
    int low = __builtin_ctz(mask);  // any element chosen must hit member `low`
    for (size_t i = 0; i < sig.size(); i++) {
      if (!(sig[i] & (1u << low))) continue;
      int prev = dp[mask & ~sig[i]];
      if (prev != unset && (dp[mask] == unset || prev + 1 < dp[mask])) {
        dp[mask] = prev + 1;
      }
    }
  }
  if (dp[full] == unset) return std::nullopt;

  // Greedy smallest-element-first reconstruction gives the lexicographically
  // smallest optimum.
  std::vector<int> out;
  uint32_t mask = full;
  while (mask != 0) {
    for (size_t i = 0; i < sig.size(); i++) {
      if (!(sig[i] & mask)) continue;
      int prev = dp[mask & ~sig[i]];
      if (prev != unset && prev + 1 == dp[mask]) {
        out.push_back(element_of[i]);
        mask &= ~sig[i];
        break;
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> enumerate_min_hitting_sets(const SetSystem& sys,
                                                         int family_limit,
                                                         int universe_limit) {
  auto family = reduce_family(sys.family);
  const int m = static_cast<int>(family.size());
  if (m > family_limit) {
    throw Error(ErrorCode::FamilyTooLarge,
                "family of size " + std::to_string(m) + " exceeds limit " +
                    std::to_string(family_limit));
  }
  std::vector<int> elements = sys.universe;
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()),
                 elements.end());
  if (static_cast<int>(elements.size()) > universe_limit) {
    throw Error(ErrorCode::UniverseTooLarge,
                "universe of size " + std::to_string(elements.size()) +
                    " exceeds limit " + std::to_string(universe_limit));
  }
  if (family.empty()) return {{}};
  for (const auto& f : family) {
    if (f.empty()) return {};
  }

  std::vector<std::vector<int>> result;
  std::vector<int> current;

  auto is_minimal = [&](const std::vector<int>& h) {
    for (int e : h) {
      bool has_private = false;
      for (const auto& f : family) {
        if (!std::binary_search(f.begin(), f.end(), e)) continue;
        bool hit_by_other = false;
        for (int e2 : h) {
          if (e2 != e && std::binary_search(f.begin(), f.end(), e2)) {
            hit_by_other = true;
            break;
          }
        }
        if (!hit_by_other) {
          has_private = true;
          break;
        }
      }
      if (!has_private) return false;
    }
    return true;
  };

  // Branch on the first unhit family member.
  auto rec = [&](auto&& self) -> void {
    const std::vector<int>* unhit = nullptr;
    for (const auto& f : family) {
      bool hit = false;
      for (int e : current) {
        if (std::binary_search(f.begin(), f.end(), e)) {
          hit = true;
          break;
        }
      }
      if (!hit) {
        unhit = &f;
        break;
      }
    }
    if (unhit == nullptr) {
      std::vector<int> h = current;
      std::sort(h.begin(), h.end());
      if (is_minimal(h)) result.push_back(std::move(h));
      return;
    }
    for (int e : *unhit) {
      current.push_back(e);
      self(self);
      current.pop_back();
    }
  };
  rec(rec);

  std::sort(result.begin(), result.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  result.erase(std::unique(result.begin(), result.end()), result.end());
  return result;
}

}  // namespace mcs
