#pragma once

// Batch computation of period data over families of FES sets, the saltus
// conjecture classifier, and CSV/JSON emitters.

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "allbut/core.hpp"

namespace allbut {

enum class Family { triples, all_size_3, size_4_search };

std::optional<Family> parse_family(std::string_view name);
std::string_view to_string(Family family);

struct SweepBounds {
  // triples: X = {a, b, a+b} with a_min <= a <= a_max, max(a+1, b_min) <= b <= b_max, b != 2a
  Pile a_min = 1;
  Pile a_max = 2;
  Pile b_min = 0;
  Pile b_max = 40;
  bool coprime = false;  // keep only gcd(a, b) = 1
  // all-size-3 / size-4-search: every subset of {1..max_element}
  Pile max_element = 12;
};

std::vector<FesSet> enumerate_family(Family family, const SweepBounds& bounds);

// Counts of the two occurrence shapes over one saltus worth of nimbers.
struct PatternStats {
  std::size_t via_a = 0;
  std::size_t via_b = 0;
};

enum class ConjectureTag { m_multiple_of_2a, other_n, endpoint, violation, not_applicable };

std::string_view to_string(ConjectureTag tag);

struct SweepRow {
  std::vector<Pile> x;
  Pile preperiod = 0;
  Pile period = 0;
  NimValue saltus = 0;
  bool pure = false;
  PatternStats pattern_stats;
  ConjectureTag conjecture_tag = ConjectureTag::not_applicable;
};

// Throws std::logic_error if a {a, b, a+b} row (b != 2a) breaks period = 3 * saltus.
SweepRow compute_row(const FesSet& x);

struct SweepOptions {
  unsigned jobs = 1;
  // When set, progress is saved to "<checkpoint>" every checkpoint_every rows
  // and an existing checkpoint is resumed.
  std::optional<std::filesystem::path> checkpoint;
  std::size_t checkpoint_every = 1000;
};

// Rows come back sorted by X regardless of jobs.
std::vector<SweepRow> run_sweep(std::vector<FesSet> tasks, const SweepOptions& options = {});

std::string rows_to_csv(const std::vector<SweepRow>& rows);
std::string rows_to_json(const std::vector<SweepRow>& rows);

// For b > 3a and gcd(a, b) = 1: compares the observed n = saltus / a against
// the multiple of 2a inside (b, a+b), or, when none exists, against the
// interval itself. Endpoint hits are reported as `endpoint`.
struct ConjectureVerdict {
  Pile a = 0;
  Pile b = 0;
  Pile period = 0;
  NimValue saltus = 0;
  std::optional<Pile> predicted_m;
  std::optional<Pile> observed_n;
  std::string interval;  // "open", "endpoint", "outside"
  ConjectureTag tag = ConjectureTag::not_applicable;
  bool matches = false;
};

ConjectureVerdict classify_conjecture(Pile a, Pile b, Pile period, NimValue saltus);
ConjectureVerdict conjecture_for(Pile a, Pile b);
std::vector<ConjectureVerdict> conjecture_sweep(Pile a_max, Pile b_max, unsigned jobs = 1);

std::string conjecture_to_csv(const std::vector<ConjectureVerdict>& verdicts);
std::string conjecture_to_json(const std::vector<ConjectureVerdict>& verdicts);

}  // namespace allbut
