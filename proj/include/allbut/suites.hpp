#pragma once

// Named parameter grids over the verifiers, shared by the CLI and the
// acceptance suite.

#include <string_view>
#include <vector>

#include "allbut/verifiers.hpp"

namespace allbut {

struct SuiteBounds {
  Pile a_max = 6;         // lemma15
  Pile b_max = 20;        // lemma15
  Pile max = 15;          // largest element (or largest b) for the other grids
  NimValue k_limit = 200; // lemma15 and indegree
};

// lemma15, reductions, reductions-2a, reductions-2b, reductions-generic,
// pure3, ratio, scaling, indegree, all.
const std::vector<std::string_view>& suite_names();
bool is_suite(std::string_view name);

// Verdicts sorted by (check, params). Throws ErrorKind::invalid_input for an
// unknown suite name.
std::vector<Verdict> run_suite(std::string_view name, const SuiteBounds& bounds,
                               unsigned jobs = 1);

struct SuiteSummary {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t precondition = 0;
};

SuiteSummary summarize(const std::vector<Verdict>& verdicts);

}  // namespace allbut
