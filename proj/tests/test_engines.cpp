#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "allbut/core.hpp"
#include "allbut/fes_engine.hpp"
#include "allbut/naive_engine.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace allbut;

namespace {

std::vector<Pile> elems(const FesSet& x) { return {x.elements().begin(), x.elements().end()}; }

FesSet random_set(std::mt19937_64& rng, std::size_t max_size, Pile max_element) {
  std::set<std::int64_t> s;
  const std::size_t size = rng() % (max_size + 1);
  while (s.size() < size) s.insert(1 + static_cast<std::int64_t>(rng() % max_element));
  return FesSet::validate(std::vector<std::int64_t>(s.begin(), s.end()));
}

}  // namespace

TEST_CASE("naive engine on worked examples") {
  CHECK(grundy_prefix(FesSet{}, 5).values == std::vector<NimValue>{0, 1, 2, 3, 4, 5});
  CHECK(grundy_prefix(FesSet::validate({1}), 6).values == std::vector<NimValue>{0, 0, 1, 1, 2, 2, 3});

  const FesSet x = FesSet::validate({2, 3, 6, 8});
  const NimSequence seq = grundy_prefix(x, 18);
  const std::vector<NimValue> table{0, 1, 0, 1, 2, 3, 2, 3, 0, 1, 4, 5, 2, 3, 5, 0, 4, 5, 4};
  for (Pile n = 0; n <= 18; ++n)
    if (n != 15) CHECK(seq[n] == table[n]);
  // Pile 15 is pinned by the literal mex oracle.
  CHECK(seq[15] == oracle::literal_grundy(elems(x), 15)[15]);
  CHECK(seq[15] == 6);
}

TEST_CASE("naive engine matches the literal mex definition") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const FesSet x = random_set(rng, 4, 24);
    const Pile n = 150;
    const auto expect = oracle::literal_grundy(elems(x), n);
    CHECK_MESSAGE(grundy_prefix(x, n).values == expect, x.to_string());
    CHECK(grundy_prefix(x, n, NaiveOptions{kDefaultPileCap, true}).values == expect);
  }
}

TEST_CASE("zero piles are exactly the losing piles") {
  for (const auto& raw : {std::vector<std::int64_t>{1}, {1, 3, 4}, {2, 3, 6, 8}, {4, 9, 13}}) {
    const FesSet x = FesSet::validate(raw);
    const auto lose = oracle::losing_piles(elems(x), 80);
    const NimSequence seq = grundy_prefix(x, 80);
    for (Pile n = 0; n <= 80; ++n) CHECK((seq[n] == 0) == lose[n]);
  }
}

TEST_CASE("first occurrences increase and occurrences stay local") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const FesSet x = random_set(rng, 4, 20);
    const NimSequence seq = grundy_prefix(x, 2000);
    std::map<NimValue, std::vector<Pile>> where;
    for (Pile n = 0; n < seq.size(); ++n) where[seq[n]].push_back(n);
    Pile prev_first = 0;
    bool first_iter = true;
    NimValue expect_k = 0;
    for (const auto& [k, piles] : where) {
      CHECK(k == expect_k++);
      if (!first_iter) CHECK(piles.front() > prev_first);
      first_iter = false;
      prev_first = piles.front();
      const bool complete = piles.front() + x.max() < seq.size();
      if (!complete) continue;
      CHECK(piles.size() <= x.size() + 1);
      for (Pile p : piles) {
        CHECK(p - piles.front() <= x.max());
        if (p != piles.front()) CHECK(x.contains(p - piles.front()));
      }
    }
    for (Pile n = 0; n < seq.size(); ++n) CHECK(seq[n] <= n);
  }
}

TEST_CASE("naive engine honours the pile cap") {
  CHECK_THROWS_AS(grundy_prefix(FesSet::validate({1}), 100, NaiveOptions{50, false}), Error);
  try {
    grundy_prefix(FesSet::validate({1}), 100, NaiveOptions{50, false});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::resource_cap);
  }
}

TEST_CASE("FES placement records") {
  const FesSet x = FesSet::validate({2, 3, 6, 8});
  const FesRun run = fes_prefix(x, 5);
  REQUIRE(run.records.size() == 6);
  CHECK(run.records[0].k == 0);
  CHECK(run.records[0].positions == std::vector<Pile>{0, 2, 8});
  CHECK(run.records[1].positions == std::vector<Pile>{1, 3, 9});
  // Pile 14 gets 5 in iteration 5; pile 15 is still unknown.
  CHECK(run.prefix.values == std::vector<NimValue>{0, 1, 0, 1, 2, 3, 2, 3, 0, 1, 4, 5, 2, 3, 5});
  CHECK(run.prefix.source == EngineKind::fes);
  for (const auto& [pile, value] : run.ahead) CHECK(pile >= run.prefix.size());
  CHECK(run.ahead.at(16) == 4);
  CHECK(run.ahead.at(18) == 4);

  for (Pile a = 1; a <= 10; ++a) {
    const FesRun single = fes_prefix(FesSet::validate({static_cast<std::int64_t>(a)}), 0);
    CHECK(single.records[0].positions == std::vector<Pile>{0, a});
  }

  const FesRun small = fes_prefix(FesSet::validate({1, 3, 4}), 2);
  CHECK(small.records[0].positions == std::vector<Pile>{0, 1, 4});
  CHECK(small.prefix.values == std::vector<NimValue>{0, 0, 1, 1, 0, 2, 1});

  const FesRun none = fes_prefix(FesSet{}, 7);
  CHECK(none.prefix.values == std::vector<NimValue>{0, 1, 2, 3, 4, 5, 6, 7});
  for (const auto& r : none.records) CHECK(r.positions.size() == 1);
}

TEST_CASE("FES iterations assign exactly the piles of value at most k") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const FesSet x = random_set(rng, 4, 16);
    const NimSequence ref = grundy_prefix(x, 600);
    FesState state;
    for (NimValue k = 0; k < 60; ++k) {
      const Pile start = state.frontier();
      const PlacementRecord rec = fes_iteration(state, x);
      CHECK(rec.k == k);
      CHECK(state.k_done() == k + 1);
      REQUIRE(!rec.positions.empty());
      CHECK(rec.positions.size() <= x.size() + 1);
      CHECK(rec.positions.front() == start);
      for (std::size_t i = 1; i < rec.positions.size(); ++i)
        CHECK(x.contains(rec.positions[i] - start));
      for (Pile p : rec.positions) CHECK(ref[p] == k);
      for (Pile n = 0; n < state.frontier() + x.max() + 1; ++n)
        CHECK(state.assigned(n) == (ref[n] <= k));
      for (const auto& [pile, value] : state.ahead()) CHECK(pile < state.frontier() + x.max());
    }
  }
}

TEST_CASE("FES and naive engines agree") {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 100; ++trial) {
    const FesSet x = random_set(rng, 4, 24);
    CHECK_MESSAGE(fes_grundy_prefix(x, 3000).values == grundy_prefix(x, 3000).values,
                  x.to_string());
  }
}

TEST_CASE("FES engine honours the pile cap") {
  try {
    fes_grundy_prefix(FesSet::validate({1}), 100, 50);
    FAIL("expected resource cap");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::resource_cap);
  }
}
