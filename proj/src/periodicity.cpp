#include "allbut/periodicity.hpp"

#include <string>

namespace allbut {

PeriodCheck verify_arith_period(std::span<const NimValue> seq, Pile n0, Pile p,
                                NimValue s, Pile n_check) {
  if (p == 0) throw Error(ErrorKind::invalid_input, "period must be positive");
  if (seq.size() < n0 + p + n_check)
    throw Error(ErrorKind::too_short,
                "need " + std::to_string(n0 + p + n_check) + " values, have " +
                    std::to_string(seq.size()));
  for (Pile n = n0; n < n0 + n_check; ++n)
    if (seq[n + p] != seq[n] + s) return PeriodCheck{false, n};
  return PeriodCheck{};
}

std::optional<ArithmeticPeriod> brute_min_period(std::span<const NimValue> seq,
                                                 Pile search_bound) {
  const Pile len = seq.size();
  if (search_bound == 0 || len < 3 * search_bound)
    throw Error(ErrorKind::too_short,
                "brute period scan needs at least 3 * search_bound = " +
                    std::to_string(3 * search_bound) + " values, have " +
                    std::to_string(len));

  for (Pile p = 1; p <= search_bound; ++p) {
    const NimValue hi = seq[len - 1];
    const NimValue lo = seq[len - 1 - p];
    if (hi < lo) continue;
    const NimValue s = hi - lo;
    // Walk back from the tail to the first violation.
    Pile n = len - p;
    while (n > 0 && seq[n - 1 + p] == seq[n - 1] + s) --n;
    if (len - p - n >= 2 * search_bound)
      return ArithmeticPeriod{n, p, s, PeriodStatus::candidate};
  }
  return std::nullopt;
}

Pile default_search_bound(const FesSet& x, Pile cap) {
  const auto e = x.elements();
  if (e.size() == 3 && e[2] == e[0] + e[1] && e[1] > 3 * e[0]) {
    const Pile bound = 3 * e[0] * (e[0] + e[1]);
    return bound < cap ? bound : cap;
  }
  Pile bound = 1;
  for (Pile i = 0; i < x.max() && bound < cap; ++i) bound *= 4;
  return bound < cap ? bound : cap;
}

}  // namespace allbut
