#include "allbut/boundary.hpp"

#include <cstdint>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "allbut/naive_engine.hpp"

namespace allbut {

namespace {

void require_width(const FesSet& x) {
  if (x.empty())
    throw Error(ErrorKind::invalid_input,
                "boundary patterns need a nonempty FES set (width 0)");
}

FesSet triple_set(Pile a, Pile b) {
  if (a < 1 || b <= a || b == 2 * a)
    throw Error(ErrorKind::precondition,
                "need X = {a, b, a+b} with b > a >= 1 and b != 2a, got a=" +
                    std::to_string(a) + " b=" + std::to_string(b));
  return FesSet::validate({static_cast<std::int64_t>(a), static_cast<std::int64_t>(b),
                           static_cast<std::int64_t>(a + b)});
}

}  // namespace

std::string BoundaryPattern::dump_line() const {
  std::ostringstream out;
  out << cells.to_string() << ' ' << anchor << ' ' << k;
  return out.str();
}

BoundaryPattern pattern_of(const FesSet& x, const FesState& state) {
  require_width(x);
  const Pile w = x.width();
  BoundaryPattern pattern{CellWord(w), state.frontier(), state.k_done()};
  for (const auto& [pile, value] : state.ahead()) {
    if (pile >= pattern.anchor + w)
      throw std::logic_error("assigned pile " + std::to_string(pile) +
                             " lies beyond anchor + max(X)");
    pattern.cells.set(pile - pattern.anchor);
  }
  return pattern;
}

BoundaryPattern pattern_of(const FesSet& x, NimValue k) {
  require_width(x);
  FesState state;
  for (NimValue i = 0; i < k; ++i) fes_iteration(state, x);
  return pattern_of(x, state);
}

BoundaryPattern initial_pattern(const FesSet& x) {
  require_width(x);
  return BoundaryPattern{CellWord(x.width()), 0, 0};
}

StepResult boundary_step(const FesSet& x, const CellWord& cells) {
  require_width(x);
  const Pile w = x.width();
  if (cells.width() != w)
    throw Error(ErrorKind::invalid_input, "pattern width " + std::to_string(cells.width()) +
                                              " does not match max(X) = " + std::to_string(w));
  // Offsets up to w can be placed; the next window can start as late as w+1.
  CellWord ext = cells.slice(0, 2 * w + 1);
  std::vector<Pile> placed{0};
  ext.set(0);
  for (Pile d : x.elements()) {
    if (ext.star(d)) continue;
    bool unreachable = true;
    for (Pile m : placed) {
      if (!x.contains(d - m)) {
        unreachable = false;
        break;
      }
    }
    if (unreachable) {
      placed.push_back(d);
      ext.set(d);
    }
  }
  const Pile delta = ext.first_blank(0);
  return StepResult{ext.slice(delta, w), delta};
}

BoundaryPattern boundary_step(const FesSet& x, const BoundaryPattern& pattern) {
  auto [next, delta] = boundary_step(x, pattern.cells);
  return BoundaryPattern{std::move(next), pattern.anchor + delta, pattern.k + 1};
}

CycleLimitExceeded::CycleLimitExceeded(NimValue k_limit,
                                       std::vector<BoundaryPattern> partial)
    : Error(ErrorKind::resource_cap,
            "no repeated boundary pattern within k_limit = " + std::to_string(k_limit)),
      trajectory_(std::move(partial)) {}

NimValue default_k_limit(const FesSet& x) {
  require_width(x);
  const Pile w = x.width();
  if (w - 1 >= 63) return std::numeric_limits<NimValue>::max();
  return (NimValue{1} << (w - 1)) + 1;
}

CycleReport detect_period(const FesSet& x, std::optional<NimValue> k_limit) {
  require_width(x);
  const NimValue limit = k_limit.value_or(default_k_limit(x));
  std::unordered_map<CellWord, std::size_t> first_seen;
  std::vector<BoundaryPattern> trajectory;
  BoundaryPattern current = initial_pattern(x);

  while (true) {
    auto it = first_seen.find(current.cells);
    if (it != first_seen.end()) {
      const BoundaryPattern& start = trajectory[it->second];
      CycleReport report;
      report.k_start = start.k;
      report.k_repeat = current.k;
      report.anchor_start = start.anchor;
      report.anchor_repeat = current.anchor;
      report.period = ArithmeticPeriod{start.anchor + x.width(),
                                       current.anchor - start.anchor,
                                       current.k - start.k,
                                       PeriodStatus::proved_by_automaton};
      trajectory.push_back(std::move(current));
      report.trajectory = std::move(trajectory);
      return report;
    }
    if (current.k >= limit) {
      trajectory.push_back(std::move(current));
      throw CycleLimitExceeded(limit, std::move(trajectory));
    }
    first_seen.emplace(current.cells, trajectory.size());
    BoundaryPattern next = boundary_step(x, current);
    trajectory.push_back(std::move(current));
    current = std::move(next);
  }
}

Pile tighten_length(const FesSet& x, const CycleReport& report) {
  return report.anchor_repeat + x.width() + report.period.period + 1;
}

ArithmeticPeriod tighten_preperiod(const FesSet& x, const CycleReport& report,
                                   const NimSequence& seq) {
  const Pile need = tighten_length(x, report);
  if (seq.size() < need)
    throw Error(ErrorKind::too_short, "tightening needs " + std::to_string(need) +
                                          " piles, sequence has " +
                                          std::to_string(seq.size()));
  const Pile p = report.period.period;
  const NimValue s = report.period.saltus;
  const Pile sound = report.period.preperiod;

  // The automaton proves the identity from `sound` on; a violation here means
  // the sequence and the automaton disagree.
  for (Pile n = sound; n + p < need; ++n)
    if (seq[n + p] != seq[n] + s)
      throw std::logic_error("automaton period violated at n = " + std::to_string(n) +
                             " for X = " + x.to_string());

  Pile n0 = sound;
  while (n0 > 0 && seq[n0 - 1 + p] == seq[n0 - 1] + s) --n0;
  return ArithmeticPeriod{n0, p, s, PeriodStatus::proved_by_automaton};
}

ArithmeticPeriod find_period(const FesSet& x) {
  const CycleReport report = detect_period(x);
  const NimSequence seq = grundy_prefix(x, tighten_length(x, report) - 1);
  return tighten_preperiod(x, report, seq);
}

Predecessor reconstruct_previous(Pile a, Pile b, const CellWord& cells) {
  triple_set(a, b);
  using Offset = std::int64_t;
  const Offset sa = static_cast<Offset>(a);
  const Offset sb = static_cast<Offset>(b);
  const Offset w = sa + sb;
  if (static_cast<Offset>(cells.width()) != w)
    throw Error(ErrorKind::invalid_input, "pattern width must be a+b");
  if (cells.star(0))
    throw Error(ErrorKind::precondition, "pattern has a star at its anchor");

  auto star = [&](Offset pos) {
    if (pos < 0) return true;
    return pos < w && cells.star(static_cast<std::size_t>(pos));
  };

  // Offsets relative to the anchor of H_k; everything below 0 is a star.
  const auto last = cells.last_star();
  const Offset third = last ? static_cast<Offset>(*last) : -1;
  const Offset first = third - w;
  const bool at_a = star(first + sa);
  const bool at_b = star(first + sb);
  if (!at_a && !at_b)
    throw Error(ErrorKind::precondition,
                "neither n+a nor n+b is starred; not a successor pattern");
  const Offset middle = at_b ? first + sb : first + sa;

  Predecessor pred{CellWord(static_cast<std::size_t>(w)), static_cast<Pile>(-first),
                   at_a && at_b};
  for (Offset j = 0; j < w; ++j) {
    const Offset pos = first + j;
    if (pos == first || pos == middle || pos == third) continue;
    if (star(pos)) pred.cells.set(static_cast<std::size_t>(j));
  }
  return pred;
}

IndegreeCensus indegree_census(Pile a, Pile b, NimValue k_limit) {
  const FesSet x = triple_set(a, b);
  IndegreeCensus census;

  const CycleReport report = detect_period(x);
  const auto& traj = report.trajectory;
  census.reachable = static_cast<std::size_t>(report.k_repeat);
  for (std::size_t i = 0; i < census.reachable; ++i) census.indegree.emplace(traj[i].cells, 0);
  census.inverse_on_cycle = true;
  for (std::size_t i = 0; i < census.reachable; ++i) {
    const BoundaryPattern& succ = traj[i + 1];
    ++census.indegree[succ.cells];
    const Predecessor pred = reconstruct_previous(a, b, succ.cells);
    if (!(pred.cells == traj[i].cells) || pred.anchor_delta != succ.anchor - traj[i].anchor)
      census.inverse_on_cycle = false;
  }
  census.all_exactly_one = census.indegree.size() == census.reachable;
  for (const auto& [cells, count] : census.indegree)
    if (count != 1) census.all_exactly_one = false;

  FesState state;
  BoundaryPattern previous = pattern_of(x, state);
  for (NimValue k = 1; k <= k_limit; ++k) {
    fes_iteration(state, x);
    BoundaryPattern current = pattern_of(x, state);
    const Predecessor pred = reconstruct_previous(a, b, current.cells);
    if (pred.both_starred) ++census.both_starred_cases;
    if (!(pred.cells == previous.cells) ||
        pred.anchor_delta != current.anchor - previous.anchor) {
      if (!census.round_trip_mismatch) census.round_trip_mismatch = k;
    }
    census.round_trip_checked = k;
    previous = std::move(current);
  }
  return census;
}

}  // namespace allbut
