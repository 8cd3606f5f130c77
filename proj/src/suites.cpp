#include "allbut/suites.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "allbut/parallel.hpp"

namespace allbut {

namespace {

using Job = std::function<Verdict()>;

void lemma15_jobs(const SuiteBounds& bounds, std::vector<Job>& jobs) {
  for (Pile a = 1; a <= bounds.a_max; ++a)
    for (Pile b = a + 1; b <= bounds.b_max; ++b)
      if (b != 2 * a)
        jobs.push_back([a, b, k = bounds.k_limit] { return verify_lemma_triple(a, b, k).verdict; });
}

void reduction_2a_jobs(const SuiteBounds& bounds, std::vector<Job>& jobs) {
  for (Pile a = 1; 2 * a <= bounds.max; ++a)
    for (Pile b = a + 1; b <= bounds.max; ++b)
      if (b != 2 * a) jobs.push_back([a, b] { return verify_reduction_2a(a, b); });
}

void reduction_2b_jobs(const SuiteBounds& bounds, std::vector<Job>& jobs) {
  for (Pile a = 1; a <= bounds.max; ++a)
    for (Pile b = 1; 2 * b <= bounds.max; ++b)
      if (a != b && a != 2 * b && b != 2 * a)
        jobs.push_back([a, b] { return verify_reduction_2b(a, b); });
}

void reduction_generic_jobs(const SuiteBounds& bounds, std::vector<Job>& jobs) {
  for (Pile a = 1; a <= bounds.max; ++a)
    for (Pile b = a + 1; b <= bounds.max; ++b)
      for (Pile c = b + 1; c <= bounds.max; ++c)
        if (c != a + b && c != 2 * a && c != 2 * b)
          jobs.push_back([a, b, c] { return verify_reduction_generic(a, b, c); });
}

void pure3_jobs(const SuiteBounds& bounds, std::vector<Job>& jobs) {
  for (Pile a = 1; a <= bounds.max; ++a)
    for (Pile b = a + 1; b <= bounds.max; ++b)
      for (Pile c = b + 1; c <= bounds.max; ++c)
        jobs.push_back([a, b, c] {
          return verify_pure_ap(FesSet::validate({static_cast<std::int64_t>(a),
                                                  static_cast<std::int64_t>(b),
                                                  static_cast<std::int64_t>(c)}));
        });
}

template <typename Fn>
void pair_jobs(const SuiteBounds& bounds, Fn fn) {
  for (Pile a = 1; a <= bounds.max; ++a)
    for (Pile b = a + 1; b <= bounds.max; ++b)
      if (b != 2 * a) fn(a, b);
}

void collect(std::string_view name, const SuiteBounds& bounds, std::vector<Job>& jobs) {
  if (name == "lemma15") {
    lemma15_jobs(bounds, jobs);
  } else if (name == "reductions-2a") {
    reduction_2a_jobs(bounds, jobs);
  } else if (name == "reductions-2b") {
    reduction_2b_jobs(bounds, jobs);
  } else if (name == "reductions-generic") {
    reduction_generic_jobs(bounds, jobs);
  } else if (name == "reductions") {
    reduction_2a_jobs(bounds, jobs);
    reduction_2b_jobs(bounds, jobs);
    reduction_generic_jobs(bounds, jobs);
  } else if (name == "pure3") {
    pure3_jobs(bounds, jobs);
  } else if (name == "ratio") {
    pair_jobs(bounds, [&](Pile a, Pile b) {
      jobs.push_back([a, b] { return verify_period_saltus_ratio(a, b); });
    });
  } else if (name == "scaling") {
    pair_jobs(bounds, [&](Pile a, Pile b) {
      for (Pile n : {2, 3}) jobs.push_back([a, b, n] { return verify_scaling(a, b, n); });
    });
  } else if (name == "indegree") {
    pair_jobs(bounds, [&](Pile a, Pile b) {
      jobs.push_back([a, b, k = bounds.k_limit] { return verify_indegree(a, b, k); });
    });
  } else if (name == "all") {
    for (auto sub : {"lemma15", "reductions", "pure3", "ratio", "scaling", "indegree"})
      collect(sub, bounds, jobs);
  } else {
    throw Error(ErrorKind::invalid_input, "unknown suite '" + std::string(name) + "'");
  }
}

}  // namespace

const std::vector<std::string_view>& suite_names() {
  static const std::vector<std::string_view> names = {
      "lemma15", "reductions", "reductions-2a", "reductions-2b", "reductions-generic",
      "pure3",   "ratio",      "scaling",       "indegree",      "all"};
  return names;
}

bool is_suite(std::string_view name) {
  const auto& names = suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

std::vector<Verdict> run_suite(std::string_view name, const SuiteBounds& bounds, unsigned jobs) {
  std::vector<Job> work;
  collect(name, bounds, work);
  if (work.empty()) return {};
  auto verdicts = parallel_map(work, jobs, [](const Job& job) { return job(); });
  std::stable_sort(verdicts.begin(), verdicts.end(), [](const Verdict& l, const Verdict& r) {
    return std::tie(l.check, l.params) < std::tie(r.check, r.params);
  });
  return verdicts;
}

SuiteSummary summarize(const std::vector<Verdict>& verdicts) {
  SuiteSummary s;
  for (const auto& v : verdicts) {
    switch (v.kind) {
      case VerdictKind::pass: ++s.pass; break;
      case VerdictKind::fail: ++s.fail; break;
      case VerdictKind::precondition_error: ++s.precondition; break;
    }
  }
  return s;
}

}  // namespace allbut
