#include "allbut/verifiers.hpp"

#include <algorithm>
#include <sstream>

#include "allbut/boundary.hpp"
#include "allbut/naive_engine.hpp"
#include "allbut/periodicity.hpp"

namespace allbut {

namespace {

Verdict make(std::string check, std::vector<Pile> params) {
  Verdict v;
  v.check = std::move(check);
  v.params = std::move(params);
  return v;
}

Verdict precondition(Verdict v, std::string why) {
  v.kind = VerdictKind::precondition_error;
  v.detail = std::move(why);
  return v;
}

Verdict failure(Verdict v, std::string why, std::optional<Pile> at = {}) {
  v.kind = VerdictKind::fail;
  v.detail = std::move(why);
  v.counterexample = at;
  return v;
}

FesSet set_of(std::initializer_list<Pile> elems) {
  std::vector<std::int64_t> raw(elems.begin(), elems.end());
  return FesSet::validate(raw);
}

// First n <= n_max where the two games disagree.
std::optional<Pile> first_difference(const FesSet& x, const FesSet& y, Pile n_max) {
  const NimSequence gx = grundy_prefix(x, n_max);
  const NimSequence gy = grundy_prefix(y, n_max);
  for (Pile n = 0; n <= n_max; ++n)
    if (gx[n] != gy[n]) return n;
  return std::nullopt;
}

Pile default_window(const FesSet& reduced, const FesSet& x) {
  return 3 * find_period(reduced).period + 2 * x.max();
}

// cells == (blank^i star^(a-i)) repeated `blocks` times, then blanks, 1 <= i <= a.
bool has_block_shape(const CellWord& cells, Pile a, Pile blocks) {
  const Pile span = a * blocks;
  if (cells.width() < span) return false;
  for (Pile i = 1; i <= a; ++i) {
    bool match = true;
    for (Pile j = 0; j < cells.width() && match; ++j) {
      const bool expect_star = j < span && (j % a) >= i;
      match = cells.star(j) == expect_star;
    }
    if (match) return true;
  }
  return false;
}

Verdict reduction_check(Verdict v, const FesSet& x, const FesSet& reduced,
                        std::optional<Pile> n_check, Pile a, Pile blocks) {
  const Pile window = n_check.value_or(default_window(reduced, x));
  if (auto n = first_difference(x, reduced, window)) {
    std::ostringstream why;
    why << "G_" << x.to_string() << " and G_" << reduced.to_string()
        << " differ at pile " << *n;
    return failure(std::move(v), why.str(), *n);
  }
  const CycleReport report = detect_period(x);
  for (const auto& pattern : report.trajectory) {
    if (!has_block_shape(pattern.cells, a, blocks)) {
      std::ostringstream why;
      why << "boundary pattern at k=" << pattern.k << " is '" << pattern.cells.to_string()
          << "', not of the " << blocks << "-block shape";
      return failure(std::move(v), why.str(), pattern.anchor);
    }
  }
  std::ostringstream ok;
  ok << "agree on [0, " << window << "]; " << report.k_repeat << " patterns match shape";
  v.detail = ok.str();
  return v;
}

}  // namespace

std::string_view to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::pass: return "pass";
    case VerdictKind::fail: return "fail";
    case VerdictKind::precondition_error: return "precondition-error";
  }
  return "?";
}

nlohmann::ordered_json to_json(const Verdict& v) {
  nlohmann::ordered_json j;
  j["check"] = v.check;
  j["params"] = v.params;
  j["verdict"] = std::string(to_string(v.kind));
  j["detail"] = v.detail;
  j["counterexample"] = v.counterexample ? nlohmann::ordered_json(*v.counterexample)
                                         : nlohmann::ordered_json(nullptr);
  if (v.period) {
    j["preperiod"] = v.period->preperiod;
    j["period"] = v.period->period;
    j["saltus"] = v.period->saltus;
  }
  j["informational"] = v.informational;
  return j;
}

std::string to_text(const Verdict& v) {
  std::ostringstream out;
  switch (v.kind) {
    case VerdictKind::pass: out << "PASS"; break;
    case VerdictKind::fail: out << "FAIL"; break;
    case VerdictKind::precondition_error: out << "PRECONDITION"; break;
  }
  out << ' ' << v.check << " (";
  for (std::size_t i = 0; i < v.params.size(); ++i) out << (i ? "," : "") << v.params[i];
  out << ')';
  if (v.period)
    out << " n0=" << v.period->preperiod << " p=" << v.period->period
        << " s=" << v.period->saltus;
  if (!v.detail.empty()) out << " : " << v.detail;
  if (v.informational) out << " [informational]";
  return out.str();
}

TripleVerdict verify_lemma_triple(Pile a, Pile b, NimValue k_limit) {
  TripleVerdict result{make("lemma_triple", {a, b, k_limit}), {}};
  if (a < 1 || b <= a || b == 2 * a) {
    result.verdict = precondition(std::move(result.verdict), "need b > a >= 1 and b != 2a");
    return result;
  }
  const Pile w = a + b;
  // Every nimber below k occurring three times puts the first k at or
  // before 3k; all copies of k then lie within max(X) of it.
  const Pile n_max = 3 * (k_limit + 1) + 2 * w;
  const NimSequence g = grundy_prefix(set_of({a, b, w}), n_max);

  std::vector<std::vector<Pile>> where(k_limit + 1);
  for (Pile n = 0; n <= n_max; ++n)
    if (g[n] <= k_limit) where[g[n]].push_back(n);

  for (NimValue k = 0; k <= k_limit; ++k) {
    const auto& occ = where[k];
    std::ostringstream why;
    if (occ.empty() || occ.front() + w > n_max) {
      why << "first occurrence of " << k << " not within the scanned prefix";
      result.verdict = failure(std::move(result.verdict), why.str());
      return result;
    }
    const Pile n = occ.front();
    if (occ.size() != 3) {
      why << "nimber " << k << " occurs " << occ.size() << " times";
      result.verdict = failure(std::move(result.verdict), why.str(), n);
      return result;
    }
    if (occ[1] == n + a && occ[2] == n + w) {
      result.occurrences.push_back({k, n, TripleForm::via_a});
    } else if (occ[1] == n + b && occ[2] == n + w) {
      result.occurrences.push_back({k, n, TripleForm::via_b});
    } else {
      why << "nimber " << k << " at " << occ[0] << "," << occ[1] << "," << occ[2];
      result.verdict = failure(std::move(result.verdict), why.str(), n);
      return result;
    }
  }
  std::size_t via_a = std::count_if(result.occurrences.begin(), result.occurrences.end(),
                                    [](const auto& o) { return o.form == TripleForm::via_a; });
  result.verdict.detail = "k <= " + std::to_string(k_limit) + ": " + std::to_string(via_a) +
                          " via +a, " + std::to_string(result.occurrences.size() - via_a) +
                          " via +b";
  return result;
}

Verdict verify_reduction_2a(Pile a, Pile b, std::optional<Pile> n_check) {
  Verdict v = make("reduction_2a", {a, b});
  if (a < 1 || b <= a || b == 2 * a) return precondition(std::move(v), "need b > a >= 1 and b != 2a");
  return reduction_check(std::move(v), set_of({a, b, 2 * a}), set_of({a, 2 * a}), n_check, a, 2);
}

Verdict verify_reduction_2b(Pile a, Pile b, std::optional<Pile> n_check) {
  Verdict v = make("reduction_2b", {a, b});
  if (a < 1 || b < 1 || a == b || a == 2 * b || b == 2 * a)
    return precondition(std::move(v), "need a, b, 2b distinct positive and b != 2a");
  return reduction_check(std::move(v), set_of({a, b, 2 * b}), set_of({a}), n_check, a, 1);
}

Verdict verify_reduction_generic(Pile a, Pile b, Pile c, std::optional<Pile> n_check) {
  Pile e[3] = {a, b, c};
  std::sort(std::begin(e), std::end(e));
  Verdict v = make("reduction_generic", {e[0], e[1], e[2]});
  if (e[0] < 1 || e[0] == e[1] || e[1] == e[2])
    return precondition(std::move(v), "need three distinct positive elements");
  if (e[2] == e[0] + e[1] || e[2] == 2 * e[0] || e[2] == 2 * e[1])
    return precondition(std::move(v), "need c not in {a+b, 2a, 2b}");
  const FesSet x = set_of({e[0], e[1], e[2]});
  const FesSet reduced = set_of({e[0], e[1]});
  const Pile window = n_check.value_or(default_window(reduced, x));
  if (auto n = first_difference(x, reduced, window)) {
    return failure(std::move(v),
                   "G_" + x.to_string() + " and G_" + reduced.to_string() +
                       " differ at pile " + std::to_string(*n),
                   *n);
  }
  v.detail = "agree on [0, " + std::to_string(window) + "]";
  return v;
}

Verdict verify_pure_ap(const FesSet& x, std::optional<Pile> n_check) {
  std::vector<Pile> params(x.elements().begin(), x.elements().end());
  Verdict v = make("pure_ap", std::move(params));
  v.informational = x.size() > 3;

  ArithmeticPeriod period{0, 1, 1, PeriodStatus::verified_on_prefix};
  if (!x.empty()) period = find_period(x);
  v.period = period;

  const Pile extra = n_check.value_or(3 * period.period);
  const NimSequence g = grundy_prefix(x, period.preperiod + period.period + extra);
  const PeriodCheck check =
      verify_arith_period(g.view(), period.preperiod, period.period, period.saltus, extra);
  if (!check.pass)
    return failure(std::move(v), "period does not hold on the concrete sequence",
                   check.first_violation);
  if (!period.pure())
    return failure(std::move(v), "preperiod " + std::to_string(period.preperiod) + " > 0",
                   period.preperiod - 1);
  v.detail = "purely arithmetic periodic";
  return v;
}

Verdict verify_period_saltus_ratio(Pile a, Pile b) {
  Verdict v = make("period_saltus_ratio", {a, b});
  if (a < 1 || b <= a || b == 2 * a) return precondition(std::move(v), "need b > a >= 1 and b != 2a");
  const ArithmeticPeriod period = find_period(set_of({a, b, a + b}));
  v.period = period;
  if (period.period != 3 * period.saltus)
    return failure(std::move(v), "period is not three times the saltus");
  v.detail = "p = 3s";
  return v;
}

Verdict verify_scaling(Pile a, Pile b, Pile n) {
  Verdict v = make("scaling", {a, b, n});
  if (a < 1 || b <= a || b == 2 * a || n < 2)
    return precondition(std::move(v), "need b > a >= 1, b != 2a, n >= 2");
  const ArithmeticPeriod base = find_period(set_of({a, b, a + b}));
  const ArithmeticPeriod scaled = find_period(set_of({n * a, n * b, n * (a + b)}));
  v.period = scaled;
  if (scaled.period != n * base.period)
    return failure(std::move(v), "scaled period " + std::to_string(scaled.period) +
                                     " != " + std::to_string(n) + " * " +
                                     std::to_string(base.period));
  v.detail = "base period " + std::to_string(base.period);
  return v;
}

Verdict verify_indegree(Pile a, Pile b, NimValue k_limit) {
  Verdict v = make("indegree", {a, b, k_limit});
  if (a < 1 || b <= a || b == 2 * a) return precondition(std::move(v), "need b > a >= 1 and b != 2a");
  const IndegreeCensus census = indegree_census(a, b, k_limit);
  if (!census.all_exactly_one)
    return failure(std::move(v), "some reachable pattern has in-degree != 1");
  if (!census.inverse_on_cycle)
    return failure(std::move(v), "reconstruction is not a left inverse of the step on the cycle");
  if (census.round_trip_mismatch)
    return failure(std::move(v), "reconstruction mismatch at k = " +
                                     std::to_string(*census.round_trip_mismatch));
  v.detail = std::to_string(census.reachable) + " reachable patterns, in-degree 1; " +
             std::to_string(census.round_trip_checked) + " round trips (" +
             std::to_string(census.both_starred_cases) + " with both +a and +b starred)";
  return v;
}

}  // namespace allbut
