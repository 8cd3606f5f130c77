#pragma once

// Test-only brute-force oracles. None of these call into the library's
// engines; they work straight from the game definition.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <tuple>
#include <vector>

namespace oracle {

using u64 = std::uint64_t;

inline bool excluded(const std::vector<u64>& x, u64 d) {
  return std::find(x.begin(), x.end(), d) != x.end();
}

// mex over the explicitly enumerated option set of each pile.
inline std::vector<u64> literal_grundy(const std::vector<u64>& x, u64 n_max) {
  std::vector<u64> g;
  for (u64 n = 0; n <= n_max; ++n) {
    std::set<u64> options;
    for (u64 s = 1; s <= n; ++s)
      if (!excluded(x, s)) options.insert(g[n - s]);
    u64 mex = 0;
    while (options.count(mex)) ++mex;
    g.push_back(mex);
  }
  return g;
}

// Single heap win/loss by game-tree search: a pile loses iff every move
// reaches a winning pile.
inline std::vector<bool> losing_piles(const std::vector<u64>& x, u64 n_max) {
  std::vector<bool> lose;
  for (u64 n = 0; n <= n_max; ++n) {
    bool any_to_losing = false;
    for (u64 s = 1; s <= n && !any_to_losing; ++s)
      if (!excluded(x, s) && lose[n - s]) any_to_losing = true;
    lose.push_back(!any_to_losing);
  }
  return lose;
}

// Multi-heap win/loss by memoized search over sorted heap tuples.
class SumGame {
 public:
  explicit SumGame(std::vector<u64> x) : x_(std::move(x)) {}

  bool losing(std::vector<u64> heaps) {
    std::sort(heaps.begin(), heaps.end());
    auto it = memo_.find(heaps);
    if (it != memo_.end()) return it->second;
    bool lose = true;
    for (std::size_t i = 0; i < heaps.size() && lose; ++i)
      for (u64 s = 1; s <= heaps[i] && lose; ++s) {
        if (excluded(x_, s)) continue;
        auto next = heaps;
        next[i] -= s;
        if (losing(next)) lose = false;
      }
    memo_.emplace(heaps, lose);
    return lose;
  }

 private:
  std::vector<u64> x_;
  std::map<std::vector<u64>, bool> memo_;
};

// Forward scan for the least (p, then n0) arithmetic period whose identity
// holds on [n0, len - p) with at least `margin` checks.
inline std::optional<std::tuple<u64, u64, u64>> forward_min_period(const std::vector<u64>& g,
                                                                   u64 max_p, u64 margin) {
  const u64 len = g.size();
  for (u64 p = 1; p <= max_p && p < len; ++p) {
    for (u64 n0 = 0; n0 + p < len && len - p - n0 >= margin; ++n0) {
      if (g[n0 + p] < g[n0]) continue;
      const u64 s = g[n0 + p] - g[n0];
      bool ok = true;
      for (u64 n = n0; n + p < len && ok; ++n) ok = g[n + p] == g[n] + s;
      if (ok) return std::tuple{n0, p, s};
    }
  }
  return std::nullopt;
}

}  // namespace oracle
