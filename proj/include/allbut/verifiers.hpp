#pragma once

// Executable checks of the structural results about all-but subtraction
// games. Every verifier is deterministic and returns a Verdict rather than
// throwing for hypothesis violations.

#include <optional>
#include <string>
#include <vector>

#include "allbut/core.hpp"
#include "json.hpp"

namespace allbut {

enum class VerdictKind { pass, fail, precondition_error };

std::string_view to_string(VerdictKind kind);

struct Verdict {
  std::string check;           // e.g. "reduction_2a"
  std::vector<Pile> params;    // the tuple the check ran on
  VerdictKind kind = VerdictKind::pass;
  std::string detail;
  std::optional<Pile> counterexample;
  std::optional<ArithmeticPeriod> period;
  bool informational = false;  // hypotheses of the underlying result do not hold

  bool passed() const { return kind == VerdictKind::pass; }
  bool failed() const { return kind == VerdictKind::fail; }
};

nlohmann::ordered_json to_json(const Verdict& v);
// "PASS reduction_2a (1,3) ..." single line.
std::string to_text(const Verdict& v);

// Which disjunct held for nimber k in X = {a, b, a+b}.
enum class TripleForm {
  via_a,  // G(n) = G(n+a) = G(n+a+b) = k
  via_b,  // G(n) = G(n+b) = G(n+a+b) = k
};

struct TripleOccurrence {
  NimValue k = 0;
  Pile first = 0;
  TripleForm form = TripleForm::via_a;
};

struct TripleVerdict {
  Verdict verdict;
  std::vector<TripleOccurrence> occurrences;  // one per k that passed
};

// For X = {a, b, a+b}: every k <= k_limit occurs exactly three times, at
// (n, n+a, n+a+b) or else (n, n+b, n+a+b). Needs b > a >= 1, b != 2a.
TripleVerdict verify_lemma_triple(Pile a, Pile b, NimValue k_limit);

// n_check defaults to 3 * period(reduced game) + 2 * max(X).

// G_{a,b,2a} = G_{a,2a}, plus the two-block boundary shape
// (i blanks, a-i stars, i blanks, a-i stars, then blanks). Needs b > a, b != 2a.
Verdict verify_reduction_2a(Pile a, Pile b, std::optional<Pile> n_check = {});

// G_{a,b,2b} = G_{a}, plus the one-block boundary shape
// (i blanks, a-i stars, then blanks). Needs a, b, 2b distinct and b != 2a.
Verdict verify_reduction_2b(Pile a, Pile b, std::optional<Pile> n_check = {});

// G_{a,b,c} = G_{a,b} after sorting so c is largest; needs c not in
// {a+b, 2a, 2b}.
Verdict verify_reduction_generic(Pile a, Pile b, Pile c,
                                 std::optional<Pile> n_check = {});

// Automaton period plus tightening; passes iff preperiod == 0. For |X| > 3 the
// verdict is marked informational. n_check extra piles are re-verified on the
// concrete sequence (default: three periods).
Verdict verify_pure_ap(const FesSet& x, std::optional<Pile> n_check = {});

// period == 3 * saltus for X = {a, b, a+b}, b != 2a.
Verdict verify_period_saltus_ratio(Pile a, Pile b);

// period({na, nb, n(a+b)}) == n * period({a, b, a+b}).
Verdict verify_scaling(Pile a, Pile b, Pile n);

// Every boundary pattern reachable for X = {a, b, a+b} has exactly one
// predecessor, and H_k -> H_{k-1} reconstruction matches the FES trajectory
// for 1 <= k <= k_limit.
Verdict verify_indegree(Pile a, Pile b, NimValue k_limit);

}  // namespace allbut
