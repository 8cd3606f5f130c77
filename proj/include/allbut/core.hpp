#pragma once

// Domain types shared by every engine: the excluded set X, nim sequences,
// arithmetic-period triples, and the Sprague-Grundy sum helpers.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "allbut/error.hpp"

namespace allbut {

using Pile = std::uint64_t;
using NimValue = std::uint64_t;

inline constexpr Pile kDefaultPileCap = 100'000'000;

// Global cap on the number of pile values any engine may materialize.
// Reads ALLBUT_PILE_CAP when set, otherwise kDefaultPileCap.
Pile pile_cap_from_env();

// The finite excluded subtraction set. Moves remove any positive number of
// counters that is not an element of the set.
class FesSet {
 public:
  FesSet() = default;

  // Sorts the input; rejects non-positive and duplicate elements.
  static FesSet validate(std::span<const std::int64_t> raw);
  static FesSet validate(std::initializer_list<std::int64_t> raw) {
    return validate(std::span<const std::int64_t>(raw.begin(), raw.size()));
  }
  // Comma-separated list, e.g. "2,3,6,8". Blank input is the empty set.
  static FesSet parse(std::string_view text);

  std::span<const Pile> elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  Pile max() const { return elements_.empty() ? 0 : elements_.back(); }
  // Length of a boundary window.
  Pile width() const { return max(); }
  bool contains(Pile d) const;

  std::string to_string() const;  // "{2,3,6,8}"

  friend bool operator==(const FesSet&, const FesSet&) = default;
  friend auto operator<=>(const FesSet&, const FesSet&) = default;

 private:
  explicit FesSet(std::vector<Pile> elements) : elements_(std::move(elements)) {}

  std::vector<Pile> elements_;
};

enum class EngineKind { naive, literal, fes, synthetic };

std::string_view to_string(EngineKind kind);

// G(0..size()-1).
struct NimSequence {
  std::vector<NimValue> values;
  EngineKind source = EngineKind::synthetic;

  std::size_t size() const { return values.size(); }
  NimValue operator[](Pile n) const { return values[n]; }
  std::span<const NimValue> view() const { return values; }
};

enum class PeriodStatus { proved_by_automaton, verified_on_prefix, candidate };

std::string_view to_string(PeriodStatus status);

// G(n + period) = G(n) + saltus for all n >= preperiod.
struct ArithmeticPeriod {
  Pile preperiod = 0;
  Pile period = 1;
  NimValue saltus = 0;
  PeriodStatus status = PeriodStatus::candidate;

  bool pure() const { return preperiod == 0; }

  // Compares the triple only; status is provenance.
  bool same_triple(const ArithmeticPeriod& other) const {
    return preperiod == other.preperiod && period == other.period &&
           saltus == other.saltus;
  }
};

// XOR of the heaps' nimbers.
NimValue sum_nimber(std::span<const Pile> heaps, const NimSequence& seq);

struct Move {
  std::size_t heap = 0;  // index into the heap list
  Pile take = 0;         // amount removed, never an element of X
  Pile to = 0;           // resulting heap size
};

// A move to a position of nimber 0, or nullopt when the position is already
// a P-position. Prefers the first heap that admits such a move, then the
// smallest removal.
std::optional<Move> optimal_move(std::span<const Pile> heaps,
                                 const NimSequence& seq, const FesSet& x);

}  // namespace allbut
