#pragma once

// Boundary patterns of H_k (star where G < k, blank where G >= k) and the
// deterministic pattern-to-pattern automaton. A repeated pattern proves
// arithmetic periodicity of the nim sequence.

#include <optional>
#include <unordered_map>
#include <vector>

#include "allbut/cell_word.hpp"
#include "allbut/core.hpp"
#include "allbut/fes_engine.hpp"

namespace allbut {

// Window of width max(X) starting at the smallest blank pile (the anchor).
// cells[0] is always blank and every pile past the window is blank.
struct BoundaryPattern {
  CellWord cells;
  Pile anchor = 0;
  NimValue k = 0;

  // "<cells> <anchor> <k>", cells as '*' and '.'.
  std::string dump_line() const;
};

// Pattern of H_k with k = state.k_done(). Throws if X is empty, and
// std::logic_error if an assigned pile lies past the window.
BoundaryPattern pattern_of(const FesSet& x, const FesState& state);
// Convenience: runs k FES iterations first.
BoundaryPattern pattern_of(const FesSet& x, NimValue k);

BoundaryPattern initial_pattern(const FesSet& x);

struct StepResult {
  CellWord next;
  Pile anchor_delta = 0;
};

// One FES iteration simulated on the window alone. Reads only the cells, so
// the result is independent of where the window is anchored.
StepResult boundary_step(const FesSet& x, const CellWord& cells);
BoundaryPattern boundary_step(const FesSet& x, const BoundaryPattern& pattern);

struct CycleReport {
  NimValue k_start = 0;
  NimValue k_repeat = 0;
  Pile anchor_start = 0;
  Pile anchor_repeat = 0;
  // Sound triple: preperiod = anchor_start + max(X), status proved.
  ArithmeticPeriod period;
  // Patterns for k = 0..k_repeat; the last equals trajectory[k_start].
  std::vector<BoundaryPattern> trajectory;
};

class CycleLimitExceeded : public Error {
 public:
  CycleLimitExceeded(NimValue k_limit, std::vector<BoundaryPattern> partial);
  const std::vector<BoundaryPattern>& trajectory() const { return trajectory_; }

 private:
  std::vector<BoundaryPattern> trajectory_;
};

// 2^(max(X)-1) + 1, saturating; pigeonhole guarantees a repeat before it.
NimValue default_k_limit(const FesSet& x);

// Iterates from the all-blank pattern until some pattern repeats.
CycleReport detect_period(const FesSet& x, std::optional<NimValue> k_limit = {});

// Walks the sound preperiod down to the least n0 with G(n + p) = G(n) + s
// for every n >= n0. seq must cover [0, anchor_repeat + max(X) + period].
ArithmeticPeriod tighten_preperiod(const FesSet& x, const CycleReport& report,
                                   const NimSequence& seq);

// Pile count tighten_preperiod needs for this report.
Pile tighten_length(const FesSet& x, const CycleReport& report);

// detect_period + naive sequence + tighten_preperiod. X must be nonempty.
ArithmeticPeriod find_period(const FesSet& x);

// ---- X = {a, b, a+b} ------------------------------------------------------

// H_{k-1} recovered from H_k for X = {a, b, a+b}: the largest star is the
// third pile with value k-1, the first sits a+b below it, and the middle one
// is at +b when both +a and +b are starred, else whichever is starred.
struct Predecessor {
  CellWord cells;
  Pile anchor_delta = 0;  // anchor(H_k) - anchor(H_{k-1})
  bool both_starred = false;
};

// Throws ErrorKind::precondition if the cells are not a valid successor.
Predecessor reconstruct_previous(Pile a, Pile b, const CellWord& cells);

struct IndegreeCensus {
  std::unordered_map<CellWord, std::size_t> indegree;  // over reachable patterns
  std::size_t reachable = 0;
  bool all_exactly_one = false;
  // reconstruct_previous(step(P)) == P for every reachable P.
  bool inverse_on_cycle = false;
  // pattern_of(k) -> pattern_of(k-1) round trip for 1 <= k <= k_limit.
  NimValue round_trip_checked = 0;
  std::optional<NimValue> round_trip_mismatch;
  std::size_t both_starred_cases = 0;
};

IndegreeCensus indegree_census(Pile a, Pile b, NimValue k_limit);

}  // namespace allbut
