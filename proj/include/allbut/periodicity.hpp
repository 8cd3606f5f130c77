#pragma once

// Automaton-free checks of arithmetic periodicity on a concrete sequence.

#include <optional>
#include <span>

#include "allbut/core.hpp"

namespace allbut {

struct PeriodCheck {
  bool pass = true;
  std::optional<Pile> first_violation;
};

// Checks G(n + p) = G(n) + s for n in [n0, n0 + n_check).
// Needs seq.size() >= n0 + p + n_check.
PeriodCheck verify_arith_period(std::span<const NimValue> seq, Pile n0, Pile p,
                                NimValue s, Pile n_check);

inline constexpr Pile kDefaultSearchCap = 8192;

// Exhaustive scan: least p <= search_bound, then least n0, with s forced by
// the tail. A candidate must hold over at least 2 * search_bound consecutive
// checks ending one period before the end of seq, which rules out short
// coincidental runs. Needs seq.size() >= 3 * search_bound.
std::optional<ArithmeticPeriod> brute_min_period(std::span<const NimValue> seq,
                                                 Pile search_bound);

// 3a(a+b) for X = {a, b, a+b} with b > 3a; otherwise min(4^max(X), cap).
Pile default_search_bound(const FesSet& x, Pile cap = kDefaultSearchCap);

}  // namespace allbut
