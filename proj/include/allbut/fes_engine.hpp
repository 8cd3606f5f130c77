#pragma once

// The FES algorithm: iteration k places every pile whose nimber is k, using
// nothing but membership tests against X.

#include <map>
#include <optional>
#include <vector>

#include "allbut/core.hpp"

namespace allbut {

// Piles assigned nimber k during iteration k, in assignment order. The first
// entry is the smallest unknown pile at the start of the iteration; every
// later entry is that pile plus an element of X.
struct PlacementRecord {
  NimValue k = 0;
  std::vector<Pile> positions;
};

// Assigned piles after k_done() iterations, split into the certain contiguous
// prefix [0, frontier()) and the few piles assigned ahead of the frontier.
// A pile is unknown iff it is in neither part.
class FesState {
 public:
  Pile frontier() const { return prefix_.size(); }
  NimValue k_done() const { return k_done_; }

  std::optional<NimValue> value_at(Pile n) const;
  bool assigned(Pile n) const { return value_at(n).has_value(); }

  const std::vector<NimValue>& prefix() const { return prefix_; }
  const std::map<Pile, NimValue>& ahead() const { return ahead_; }

 private:
  friend PlacementRecord fes_iteration(FesState& state, const FesSet& x);

  std::vector<NimValue> prefix_;
  std::map<Pile, NimValue> ahead_;
  NimValue k_done_ = 0;
};

// Runs iteration k = state.k_done() in place and returns its placements.
PlacementRecord fes_iteration(FesState& state, const FesSet& x);

struct FesRun {
  NimSequence prefix;  // only the piles whose value is certain
  std::vector<PlacementRecord> records;
  std::map<Pile, NimValue> ahead;  // assigned beyond the prefix (debug)
};

// Iterations 0..k_max.
FesRun fes_prefix(const FesSet& x, NimValue k_max, Pile cap = pile_cap_from_env());

// Runs iterations until G(0..n_max) is certain and returns exactly that range.
NimSequence fes_grundy_prefix(const FesSet& x, Pile n_max,
                              Pile cap = pile_cap_from_env());

}  // namespace allbut
