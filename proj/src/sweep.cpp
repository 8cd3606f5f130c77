#include "allbut/sweep.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "allbut/boundary.hpp"
#include "allbut/parallel.hpp"
#include "allbut/verifiers.hpp"
#include "json.hpp"

namespace allbut {

namespace {

FesSet set_of(std::vector<Pile> elems) {
  std::vector<std::int64_t> raw(elems.begin(), elems.end());
  return FesSet::validate(raw);
}

bool is_triple_form(const FesSet& x) {
  const auto e = x.elements();
  return e.size() == 3 && e[2] == e[0] + e[1] && e[1] != 2 * e[0];
}

const char* kElementNames[] = {"a", "b", "c", "d", "e", "f", "g", "h"};

std::string element_name(std::size_t i) {
  return i < std::size(kElementNames) ? kElementNames[i] : "x" + std::to_string(i);
}

nlohmann::ordered_json row_to_json(const SweepRow& row) {
  nlohmann::ordered_json j;
  for (std::size_t i = 0; i < row.x.size(); ++i) j[element_name(i)] = row.x[i];
  j["preperiod"] = row.preperiod;
  j["period"] = row.period;
  j["saltus"] = row.saltus;
  j["pure"] = row.pure;
  j["pattern_stats"] = {{"via_a", row.pattern_stats.via_a}, {"via_b", row.pattern_stats.via_b}};
  j["conjecture_tag"] = std::string(to_string(row.conjecture_tag));
  return j;
}

SweepRow row_from_json(const nlohmann::ordered_json& j) {
  SweepRow row;
  for (std::size_t i = 0; j.contains(element_name(i)); ++i)
    row.x.push_back(j.at(element_name(i)).get<Pile>());
  row.preperiod = j.at("preperiod").get<Pile>();
  row.period = j.at("period").get<Pile>();
  row.saltus = j.at("saltus").get<NimValue>();
  row.pure = j.at("pure").get<bool>();
  row.pattern_stats.via_a = j.at("pattern_stats").at("via_a").get<std::size_t>();
  row.pattern_stats.via_b = j.at("pattern_stats").at("via_b").get<std::size_t>();
  const auto tag = j.at("conjecture_tag").get<std::string>();
  for (auto t : {ConjectureTag::m_multiple_of_2a, ConjectureTag::other_n, ConjectureTag::endpoint,
                 ConjectureTag::violation, ConjectureTag::not_applicable})
    if (to_string(t) == tag) row.conjecture_tag = t;
  return row;
}

void write_file_atomically(const std::filesystem::path& path, const std::string& text) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::io, "cannot write " + tmp.string());
    out << text;
    if (!out.flush()) throw Error(ErrorKind::io, "write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw Error(ErrorKind::io, "cannot rename " + tmp.string() + ": " + ec.message());
}

void save_checkpoint(const std::filesystem::path& path, std::size_t total,
                     const std::vector<SweepRow>& done) {
  nlohmann::ordered_json j;
  j["total_tasks"] = total;
  j["last"] = done.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(done.back().x);
  auto rows = nlohmann::ordered_json::array();
  for (const auto& r : done) rows.push_back(row_to_json(r));
  j["rows"] = std::move(rows);
  write_file_atomically(path, j.dump());
}

// Rows from a checkpoint, if it belongs to this task list.
std::vector<SweepRow> load_checkpoint(const std::filesystem::path& path,
                                      const std::vector<FesSet>& tasks) {
  std::ifstream in(path);
  if (!in) return {};
  nlohmann::ordered_json j;
  try {
    j = nlohmann::ordered_json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::io, "corrupt checkpoint " + path.string() + ": " + e.what());
  }
  if (j.at("total_tasks").get<std::size_t>() != tasks.size())
    throw Error(ErrorKind::io, "checkpoint " + path.string() + " belongs to a different sweep");
  std::vector<SweepRow> rows;
  for (const auto& r : j.at("rows")) rows.push_back(row_from_json(r));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto e = tasks[i].elements();
    if (!std::equal(e.begin(), e.end(), rows[i].x.begin(), rows[i].x.end()))
      throw Error(ErrorKind::io, "checkpoint " + path.string() + " belongs to a different sweep");
  }
  return rows;
}

}  // namespace

std::optional<Family> parse_family(std::string_view name) {
  if (name == "triples") return Family::triples;
  if (name == "all-size-3") return Family::all_size_3;
  if (name == "size-4-search") return Family::size_4_search;
  return std::nullopt;
}

std::string_view to_string(Family family) {
  switch (family) {
    case Family::triples: return "triples";
    case Family::all_size_3: return "all-size-3";
    case Family::size_4_search: return "size-4-search";
  }
  return "?";
}

std::string_view to_string(ConjectureTag tag) {
  switch (tag) {
    case ConjectureTag::m_multiple_of_2a: return "m-multiple-of-2a";
    case ConjectureTag::other_n: return "other-n";
    case ConjectureTag::endpoint: return "endpoint";
    case ConjectureTag::violation: return "violation";
    case ConjectureTag::not_applicable: return "not-applicable";
  }
  return "?";
}

std::vector<FesSet> enumerate_family(Family family, const SweepBounds& bounds) {
  std::vector<FesSet> out;
  switch (family) {
    case Family::triples:
      for (Pile a = std::max<Pile>(bounds.a_min, 1); a <= bounds.a_max; ++a)
        for (Pile b = std::max(a + 1, bounds.b_min); b <= bounds.b_max; ++b) {
          if (b == 2 * a) continue;
          if (bounds.coprime && std::gcd(a, b) != 1) continue;
          out.push_back(set_of({a, b, a + b}));
        }
      break;
    case Family::all_size_3:
      for (Pile a = 1; a <= bounds.max_element; ++a)
        for (Pile b = a + 1; b <= bounds.max_element; ++b)
          for (Pile c = b + 1; c <= bounds.max_element; ++c) out.push_back(set_of({a, b, c}));
      break;
    case Family::size_4_search:
      for (Pile a = 1; a <= bounds.max_element; ++a)
        for (Pile b = a + 1; b <= bounds.max_element; ++b)
          for (Pile c = b + 1; c <= bounds.max_element; ++c)
            for (Pile d = c + 1; d <= bounds.max_element; ++d)
              out.push_back(set_of({a, b, c, d}));
      break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

SweepRow compute_row(const FesSet& x) {
  SweepRow row;
  row.x.assign(x.elements().begin(), x.elements().end());
  const ArithmeticPeriod period = find_period(x);
  row.preperiod = period.preperiod;
  row.period = period.period;
  row.saltus = period.saltus;
  row.pure = period.pure();

  if (is_triple_form(x)) {
    const Pile a = row.x[0];
    const Pile b = row.x[1];
    if (row.period != 3 * row.saltus)
      throw std::logic_error("period != 3 * saltus for " + x.to_string());
    const TripleVerdict lemma = verify_lemma_triple(a, b, row.saltus - 1);
    if (!lemma.verdict.passed())
      throw std::logic_error("triple-occurrence check failed for " + x.to_string() + ": " +
                             lemma.verdict.detail);
    for (const auto& occ : lemma.occurrences)
      (occ.form == TripleForm::via_a ? row.pattern_stats.via_a : row.pattern_stats.via_b)++;
    row.conjecture_tag = classify_conjecture(a, b, row.period, row.saltus).tag;
  }
  return row;
}

std::vector<SweepRow> run_sweep(std::vector<FesSet> tasks, const SweepOptions& options) {
  std::sort(tasks.begin(), tasks.end());
  std::vector<SweepRow> rows;
  if (options.checkpoint) rows = load_checkpoint(*options.checkpoint, tasks);

  const std::size_t chunk = options.checkpoint ? std::max<std::size_t>(options.checkpoint_every, 1)
                                               : std::max<std::size_t>(tasks.size(), 1);
  while (rows.size() < tasks.size()) {
    const std::size_t begin = rows.size();
    const std::size_t end = std::min(tasks.size(), begin + chunk);
    std::vector<FesSet> batch(tasks.begin() + static_cast<std::ptrdiff_t>(begin),
                              tasks.begin() + static_cast<std::ptrdiff_t>(end));
    auto computed = parallel_map(batch, options.jobs, compute_row);
    std::move(computed.begin(), computed.end(), std::back_inserter(rows));
    if (options.checkpoint && rows.size() < tasks.size())
      save_checkpoint(*options.checkpoint, tasks.size(), rows);
  }
  if (options.checkpoint) std::filesystem::remove(*options.checkpoint);
  return rows;
}

std::string rows_to_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  const std::size_t width = rows.empty() ? 3 : rows.front().x.size();
  for (std::size_t i = 0; i < width; ++i) out << element_name(i) << ',';
  out << "preperiod,period,saltus,pure\n";
  for (const auto& r : rows) {
    for (Pile e : r.x) out << e << ',';
    out << r.preperiod << ',' << r.period << ',' << r.saltus << ',' << (r.pure ? "true" : "false")
        << '\n';
  }
  return out.str();
}

std::string rows_to_json(const std::vector<SweepRow>& rows) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : rows) arr.push_back(row_to_json(r));
  return arr.dump(2) + "\n";
}

ConjectureVerdict classify_conjecture(Pile a, Pile b, Pile period, NimValue saltus) {
  ConjectureVerdict v;
  v.a = a;
  v.b = b;
  v.period = period;
  v.saltus = saltus;
  if (a >= 1 && saltus % a == 0) v.observed_n = saltus / a;

  if (v.observed_n) {
    const Pile n = *v.observed_n;
    v.interval = (b < n && n < a + b) ? "open" : (n == b || n == a + b) ? "endpoint" : "outside";
  } else {
    v.interval = "outside";
  }

  if (a < 1 || b <= 3 * a || std::gcd(a, b) != 1) {
    v.tag = ConjectureTag::not_applicable;
    return v;
  }
  // At most one multiple of 2a fits in an open interval of length a.
  const Pile m = (b / (2 * a) + 1) * (2 * a);
  if (m < a + b) v.predicted_m = m;

  if (!v.observed_n || period != 3 * saltus) {
    v.tag = ConjectureTag::violation;
  } else if (v.predicted_m) {
    v.matches = *v.observed_n == *v.predicted_m;
    v.tag = v.matches ? ConjectureTag::m_multiple_of_2a : ConjectureTag::violation;
  } else if (v.interval == "open") {
    v.matches = true;
    v.tag = ConjectureTag::other_n;
  } else if (v.interval == "endpoint") {
    v.tag = ConjectureTag::endpoint;
  } else {
    v.tag = ConjectureTag::violation;
  }
  return v;
}

ConjectureVerdict conjecture_for(Pile a, Pile b) {
  const ArithmeticPeriod p = find_period(set_of({a, b, a + b}));
  return classify_conjecture(a, b, p.period, p.saltus);
}

std::vector<ConjectureVerdict> conjecture_sweep(Pile a_max, Pile b_max, unsigned jobs) {
  std::vector<std::pair<Pile, Pile>> pairs;
  for (Pile a = 1; a <= a_max; ++a)
    for (Pile b = 3 * a + 1; b <= b_max; ++b)
      if (std::gcd(a, b) == 1) pairs.emplace_back(a, b);
  if (pairs.empty()) return {};
  return parallel_map(pairs, jobs, [](const auto& ab) { return conjecture_for(ab.first, ab.second); });
}

namespace {

nlohmann::ordered_json conjecture_json(const ConjectureVerdict& v) {
  nlohmann::ordered_json j;
  j["a"] = v.a;
  j["b"] = v.b;
  j["period"] = v.period;
  j["saltus"] = v.saltus;
  j["predicted_m"] = v.predicted_m ? nlohmann::ordered_json(*v.predicted_m) : nlohmann::ordered_json(nullptr);
  j["observed_n"] = v.observed_n ? nlohmann::ordered_json(*v.observed_n) : nlohmann::ordered_json(nullptr);
  j["interval"] = v.interval;
  j["tag"] = std::string(to_string(v.tag));
  j["matches"] = v.matches;
  return j;
}

}  // namespace

std::string conjecture_to_csv(const std::vector<ConjectureVerdict>& verdicts) {
  std::ostringstream out;
  out << "a,b,period,saltus,predicted_m,observed_n,interval,tag,matches\n";
  for (const auto& v : verdicts) {
    out << v.a << ',' << v.b << ',' << v.period << ',' << v.saltus << ',';
    if (v.predicted_m) out << *v.predicted_m;
    out << ',';
    if (v.observed_n) out << *v.observed_n;
    out << ',' << v.interval << ',' << to_string(v.tag) << ',' << (v.matches ? "true" : "false")
        << '\n';
  }
  return out.str();
}

std::string conjecture_to_json(const std::vector<ConjectureVerdict>& verdicts) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& v : verdicts) arr.push_back(conjecture_json(v));
  return arr.dump(2) + "\n";
}

}  // namespace allbut
