#include "allbut/fes_engine.hpp"

#include <string>

namespace allbut {

std::optional<NimValue> FesState::value_at(Pile n) const {
  if (n < prefix_.size()) return prefix_[n];
  auto it = ahead_.find(n);
  if (it == ahead_.end()) return std::nullopt;
  return it->second;
}

PlacementRecord fes_iteration(FesState& state, const FesSet& x) {
  const NimValue k = state.k_done_;
  const Pile n = state.frontier();
  PlacementRecord record{k, {n}};
  state.ahead_.emplace(n, k);

  // Only this iteration can have placed k, so the "every earlier k" test
  // scans the current record.
  for (Pile d : x.elements()) {
    const Pile candidate = n + d;
    if (state.ahead_.contains(candidate)) continue;
    bool unreachable = true;
    for (Pile m : record.positions) {
      if (!x.contains(candidate - m)) {
        unreachable = false;
        break;
      }
    }
    if (unreachable) {
      record.positions.push_back(candidate);
      state.ahead_.emplace(candidate, k);
    }
  }

  while (!state.ahead_.empty() && state.ahead_.begin()->first == state.prefix_.size()) {
    state.prefix_.push_back(state.ahead_.begin()->second);
    state.ahead_.erase(state.ahead_.begin());
  }
  ++state.k_done_;
  return record;
}

namespace {

void check_cap(const FesState& state, const FesSet& x, Pile cap) {
  if (state.frontier() + x.max() >= cap)
    throw Error(ErrorKind::resource_cap,
                "FES frontier " + std::to_string(state.frontier()) +
                    " plus max(X) reaches pile cap " + std::to_string(cap));
}

}  // namespace

FesRun fes_prefix(const FesSet& x, NimValue k_max, Pile cap) {
  FesState state;
  FesRun run;
  run.records.reserve(k_max + 1);
  for (NimValue k = 0; k <= k_max; ++k) {
    check_cap(state, x, cap);
    run.records.push_back(fes_iteration(state, x));
  }
  run.prefix = NimSequence{state.prefix(), EngineKind::fes};
  run.ahead = state.ahead();
  return run;
}

NimSequence fes_grundy_prefix(const FesSet& x, Pile n_max, Pile cap) {
  if (n_max >= cap)
    throw Error(ErrorKind::resource_cap,
                "requested " + std::to_string(n_max) + "+1 piles exceeds cap " +
                    std::to_string(cap));
  FesState state;
  while (state.frontier() <= n_max) {
    check_cap(state, x, cap);
    fes_iteration(state, x);
  }
  NimSequence seq{state.prefix(), EngineKind::fes};
  seq.values.resize(n_max + 1);
  return seq;
}

}  // namespace allbut
