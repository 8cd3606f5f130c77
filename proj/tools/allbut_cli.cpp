// allbut: nim sequences and arithmetic periods of all-but subtraction games.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 resource cap.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "allbut/boundary.hpp"
#include "allbut/core.hpp"
#include "allbut/fes_engine.hpp"
#include "allbut/naive_engine.hpp"
#include "allbut/periodicity.hpp"
#include "allbut/suites.hpp"
#include "allbut/sweep.hpp"
#include "json.hpp"

namespace {

using namespace allbut;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

struct VerificationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string format;  // empty: csv for sweep, text otherwise
  std::optional<Pile> cap;
};

void apply_cap(const Common& common) {
  if (common.cap) setenv("ALLBUT_PILE_CAP", std::to_string(*common.cap).c_str(), 1);
}

std::vector<Pile> parse_piles(const std::string& text) {
  std::vector<Pile> out;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (token.empty()) continue;
    std::size_t used = 0;
    long long v = -1;
    try {
      v = std::stoll(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size() || v < 0)
      throw Error(ErrorKind::invalid_input, "bad heap size '" + token + "'");
    out.push_back(static_cast<Pile>(v));
  }
  return out;
}

// ---- grundy ----------------------------------------------------------------

struct GrundyArgs {
  std::string x;
  Pile n = 20;
  std::string engine = "naive";
};

int run_grundy(const GrundyArgs& args, const Common& common) {
  apply_cap(common);
  const FesSet x = FesSet::parse(args.x);
  NimSequence seq;
  if (args.engine == "naive") {
    seq = grundy_prefix(x, args.n);
  } else if (args.engine == "literal") {
    seq = grundy_prefix(x, args.n, NaiveOptions{pile_cap_from_env(), true});
  } else if (args.engine == "fes") {
    seq = fes_grundy_prefix(x, args.n);
  } else {
    seq = grundy_prefix(x, args.n);
    const NimSequence other = fes_grundy_prefix(x, args.n);
    for (Pile i = 0; i <= args.n; ++i)
      if (seq[i] != other[i])
        throw std::logic_error("engines disagree at pile " + std::to_string(i) + ": naive " +
                               std::to_string(seq[i]) + ", fes " + std::to_string(other[i]));
  }

  if (common.format == "json") {
    json j;
    j["x"] = std::vector<Pile>(x.elements().begin(), x.elements().end());
    j["engine"] = args.engine;
    j["values"] = seq.values;
    std::cout << j.dump() << '\n';
  } else if (common.format == "csv") {
    std::cout << "n,g\n";
    for (Pile i = 0; i < seq.size(); ++i) std::cout << i << ',' << seq[i] << '\n';
  } else {
    for (Pile i = 0; i < seq.size(); ++i) std::cout << (i ? " " : "") << seq[i];
    std::cout << '\n';
  }
  return kExitOk;
}

// ---- period ----------------------------------------------------------------

struct PeriodArgs {
  std::string x;
  std::optional<NimValue> k_limit;
};

int run_period(const PeriodArgs& args, const Common& common) {
  apply_cap(common);
  const FesSet x = FesSet::parse(args.x);
  const CycleReport report = detect_period(x, args.k_limit);
  const Pile bound = default_search_bound(x);
  const Pile length = std::max(tighten_length(x, report), 3 * bound);
  const NimSequence seq = grundy_prefix(x, length - 1);
  const ArithmeticPeriod tight = tighten_preperiod(x, report, seq);
  const auto oracle = brute_min_period(seq.view(), bound);
  const bool agree = oracle && oracle->same_triple(tight);

  if (common.format == "json") {
    json j;
    j["x"] = std::vector<Pile>(x.elements().begin(), x.elements().end());
    j["automaton"] = {{"k_start", report.k_start},
                      {"k_repeat", report.k_repeat},
                      {"anchor_start", report.anchor_start},
                      {"anchor_repeat", report.anchor_repeat},
                      {"sound_preperiod", report.period.preperiod},
                      {"period", report.period.period},
                      {"saltus", report.period.saltus},
                      {"status", std::string(to_string(report.period.status))}};
    j["tightened"] = {{"preperiod", tight.preperiod},
                      {"period", tight.period},
                      {"saltus", tight.saltus},
                      {"pure", tight.pure()},
                      {"status", std::string(to_string(tight.status))}};
    if (oracle)
      j["oracle"] = {{"preperiod", oracle->preperiod},
                     {"period", oracle->period},
                     {"saltus", oracle->saltus},
                     {"status", std::string(to_string(oracle->status))},
                     {"search_bound", bound},
                     {"agree", agree}};
    else
      j["oracle"] = {{"search_bound", bound}, {"agree", false}};
    std::cout << j.dump(2) << '\n';
  } else if (common.format == "csv") {
    std::cout << "preperiod,period,saltus,pure,status,oracle_agree\n"
              << tight.preperiod << ',' << tight.period << ',' << tight.saltus << ','
              << (tight.pure() ? "true" : "false") << ',' << to_string(tight.status) << ','
              << (agree ? "true" : "false") << '\n';
  } else {
    std::cout << "X = " << x.to_string() << '\n'
              << "automaton: k_start=" << report.k_start << " k_repeat=" << report.k_repeat
              << " anchor_start=" << report.anchor_start
              << " anchor_repeat=" << report.anchor_repeat
              << " sound_n0=" << report.period.preperiod << " status="
              << to_string(report.period.status) << '\n';
    std::cout << "oracle: ";
    if (oracle)
      std::cout << "n0=" << oracle->preperiod << " p=" << oracle->period << " s=" << oracle->saltus
                << " status=" << to_string(oracle->status);
    else
      std::cout << "no candidate within search bound " << bound;
    std::cout << " agree=" << (agree ? "true" : "false") << '\n';
    std::cout << "n0=" << tight.preperiod << " p=" << tight.period << " s=" << tight.saltus
              << " pure=" << (tight.pure() ? "true" : "false") << " status="
              << to_string(tight.status) << '\n';
  }
  if (oracle && !agree)
    throw VerificationFailure("automaton and brute-force oracle disagree");
  return kExitOk;
}

// ---- boundary --------------------------------------------------------------

struct BoundaryArgs {
  std::string x;
  std::optional<NimValue> k_limit;
};

int run_boundary(const BoundaryArgs& args, const Common& common) {
  apply_cap(common);
  const FesSet x = FesSet::parse(args.x);
  std::vector<BoundaryPattern> trajectory;
  if (args.k_limit) {
    BoundaryPattern p = initial_pattern(x);
    for (NimValue k = 0; k <= *args.k_limit; ++k) {
      BoundaryPattern next = boundary_step(x, p);
      trajectory.push_back(std::move(p));
      p = std::move(next);
    }
  } else {
    trajectory = detect_period(x).trajectory;
  }
  if (common.format == "json") {
    json arr = json::array();
    for (const auto& p : trajectory)
      arr.push_back({{"k", p.k}, {"anchor", p.anchor}, {"cells", p.cells.to_string()}});
    std::cout << arr.dump(2) << '\n';
  } else {
    for (const auto& p : trajectory) std::cout << p.dump_line() << '\n';
  }
  return kExitOk;
}

// ---- verify ----------------------------------------------------------------

struct VerifyArgs {
  std::string suite;
  SuiteBounds bounds;
  unsigned jobs = 1;
};

int run_verify(const VerifyArgs& args, const Common& common) {
  apply_cap(common);
  if (!is_suite(args.suite))
    throw Error(ErrorKind::invalid_input, "unknown suite '" + args.suite + "'");
  const auto verdicts = run_suite(args.suite, args.bounds, args.jobs);
  const SuiteSummary s = summarize(verdicts);
  if (common.format == "json") {
    json j;
    j["suite"] = args.suite;
    json arr = json::array();
    for (const auto& v : verdicts) arr.push_back(to_json(v));
    j["verdicts"] = std::move(arr);
    j["summary"] = {{"pass", s.pass}, {"fail", s.fail}, {"precondition_error", s.precondition}};
    std::cout << j.dump(2) << '\n';
  } else {
    for (const auto& v : verdicts) std::cout << to_text(v) << '\n';
    std::cout << "summary: " << s.pass << " pass, " << s.fail << " fail, " << s.precondition
              << " precondition-error\n";
  }
  return s.fail == 0 ? kExitOk : kExitVerification;
}

// ---- sweep -----------------------------------------------------------------

struct SweepArgs {
  std::string family = "triples";
  SweepBounds bounds;
  unsigned jobs = 1;
  std::string out;
};

int run_sweep_cmd(const SweepArgs& args, const Common& common) {
  apply_cap(common);
  const auto family = parse_family(args.family);
  if (!family) throw Error(ErrorKind::invalid_input, "unknown family '" + args.family + "'");
  SweepOptions options;
  options.jobs = args.jobs;
  if (!args.out.empty()) options.checkpoint = args.out + ".ckpt";
  const auto rows = run_sweep(enumerate_family(*family, args.bounds), options);
  const std::string text = common.format == "json" ? rows_to_json(rows) : rows_to_csv(rows);
  if (args.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(args.out, std::ios::binary | std::ios::trunc);
    if (!(out << text)) throw Error(ErrorKind::io, "cannot write " + args.out);
  }
  return kExitOk;
}

// ---- conjecture ------------------------------------------------------------

struct ConjectureArgs {
  Pile a_max = 4;
  Pile b_max = 40;
  unsigned jobs = 1;
};

int run_conjecture(const ConjectureArgs& args, const Common& common) {
  apply_cap(common);
  const auto verdicts = conjecture_sweep(args.a_max, args.b_max, args.jobs);
  if (common.format == "json") {
    std::cout << conjecture_to_json(verdicts);
  } else if (common.format == "csv") {
    std::cout << conjecture_to_csv(verdicts);
  } else {
    std::size_t counts[5] = {};
    for (const auto& v : verdicts) {
      ++counts[static_cast<int>(v.tag)];
      std::cout << '{' << v.a << ',' << v.b << ',' << v.a + v.b << "} saltus=" << v.saltus
                << " = " << v.a << " * ";
      if (v.observed_n)
        std::cout << *v.observed_n;
      else
        std::cout << '?';
      std::cout << "  predicted_m=";
      if (v.predicted_m)
        std::cout << *v.predicted_m;
      else
        std::cout << '-';
      std::cout << "  interval=" << v.interval << "  " << to_string(v.tag) << '\n';
    }
    std::cout << "summary:";
    for (auto tag : {ConjectureTag::m_multiple_of_2a, ConjectureTag::other_n, ConjectureTag::endpoint,
                     ConjectureTag::violation, ConjectureTag::not_applicable})
      std::cout << ' ' << to_string(tag) << '=' << counts[static_cast<int>(tag)];
    std::cout << '\n';
  }
  return kExitOk;
}

// ---- nim -------------------------------------------------------------------

struct NimArgs {
  std::string x;
  std::string heaps;
};

int run_nim(const NimArgs& args, const Common& common) {
  apply_cap(common);
  const FesSet x = FesSet::parse(args.x);
  const auto heaps = parse_piles(args.heaps);
  Pile top = 0;
  for (Pile h : heaps) top = std::max(top, h);
  const NimSequence seq = grundy_prefix(x, top);
  const NimValue total = sum_nimber(heaps, seq);
  const auto move = optimal_move(heaps, seq, x);
  if (common.format == "json") {
    json j;
    j["nimber"] = total;
    if (move)
      j["move"] = {{"heap", move->heap}, {"take", move->take}, {"to", move->to}};
    else
      j["move"] = nullptr;
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "nimber " << total << '\n';
    if (move)
      std::cout << "move: take " << move->take << " from heap " << move->heap << " (" << heaps[move->heap]
                << " -> " << move->to << ")\n";
    else
      std::cout << "losing position\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nim sequences and arithmetic periods of all-but subtraction games"};
  app.require_subcommand(1);
  Common common;
  auto add_common = [&](CLI::App* cmd, std::vector<std::string> formats) {
    cmd->add_option("--format", common.format, "Output format")
        ->check(CLI::IsMember(std::move(formats)));
    cmd->add_option("--cap", common.cap, "Pile cap (overrides ALLBUT_PILE_CAP)");
  };

  GrundyArgs grundy;
  auto* g = app.add_subcommand("grundy", "Print G(0..n)");
  g->add_option("--x", grundy.x, "Excluded set, comma separated")->required();
  g->add_option("--n", grundy.n, "Largest pile");
  g->add_option("--engine", grundy.engine, "naive, fes, both, or literal")
      ->check(CLI::IsMember({"naive", "fes", "both", "literal"}));
  add_common(g, {"text", "csv", "json"});

  PeriodArgs period;
  auto* p = app.add_subcommand("period", "Preperiod, period and saltus");
  p->add_option("--x", period.x, "Excluded set")->required();
  p->add_option("--k-limit", period.k_limit, "Iteration cap for cycle detection");
  add_common(p, {"text", "csv", "json"});

  BoundaryArgs boundary;
  auto* b = app.add_subcommand("boundary", "Dump the boundary pattern trajectory");
  b->add_option("--x", boundary.x, "Excluded set")->required();
  b->add_option("--k-limit", boundary.k_limit, "Dump k = 0..k-limit instead of one cycle");
  add_common(b, {"text", "json"});

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Run a verifier suite");
  v->add_option("suite", verify.suite, "Suite name")->required();
  v->add_option("--a-max", verify.bounds.a_max, "lemma15: largest a");
  v->add_option("--b-max", verify.bounds.b_max, "lemma15: largest b");
  v->add_option("--max", verify.bounds.max, "Largest element for the other suites");
  v->add_option("--k-limit", verify.bounds.k_limit, "Nimbers checked per set (lemma15, indegree)");
  v->add_option("--jobs", verify.jobs, "Worker threads");
  add_common(v, {"text", "json"});

  SweepArgs sweep;
  auto* s = app.add_subcommand("sweep", "Period data over a family of sets");
  s->add_option("--family", sweep.family, "triples, all-size-3, size-4-search")
      ->check(CLI::IsMember({"triples", "all-size-3", "size-4-search"}));
  s->add_option("--a-min", sweep.bounds.a_min);
  s->add_option("--a-max", sweep.bounds.a_max);
  s->add_option("--b-min", sweep.bounds.b_min);
  s->add_option("--b-max", sweep.bounds.b_max);
  s->add_flag("--coprime", sweep.bounds.coprime, "Keep gcd(a, b) = 1 only");
  s->add_option("--max", sweep.bounds.max_element, "Largest element (subset families)");
  s->add_option("--jobs", sweep.jobs, "Worker threads");
  s->add_option("--out", sweep.out, "Output file (checkpointed to <out>.ckpt)");
  add_common(s, {"csv", "json"});

  ConjectureArgs conj;
  auto* c = app.add_subcommand("conjecture", "Classify saltus data for b > 3a, gcd(a, b) = 1");
  c->add_option("--a-max", conj.a_max);
  c->add_option("--b-max", conj.b_max);
  c->add_option("--jobs", conj.jobs);
  add_common(c, {"text", "csv", "json"});

  NimArgs nim;
  auto* n = app.add_subcommand("nim", "Nim sum of a multi-heap position and a winning move");
  n->add_option("--x", nim.x, "Excluded set")->required();
  n->add_option("--heaps", nim.heaps, "Heap sizes, comma separated")->required();
  add_common(n, {"text", "json"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  try {
    if (g->parsed()) return run_grundy(grundy, common);
    if (p->parsed()) return run_period(period, common);
    if (b->parsed()) return run_boundary(boundary, common);
    if (v->parsed()) return run_verify(verify, common);
    if (s->parsed()) return run_sweep_cmd(sweep, common);
    if (c->parsed()) return run_conjecture(conj, common);
    if (n->parsed()) return run_nim(nim, common);
  } catch (const VerificationFailure& e) {
    std::cerr << "verification failure: " << e.what() << '\n';
    return kExitVerification;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    switch (e.kind()) {
      case ErrorKind::resource_cap: return kExitCap;
      case ErrorKind::io: return kExitVerification;
      default: return kExitUsage;
    }
  } catch (const std::logic_error& e) {
    std::cerr << "internal check failed: " << e.what() << '\n';
    return kExitVerification;
  }
  return kExitUsage;
}
