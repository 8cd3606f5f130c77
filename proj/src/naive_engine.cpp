#include "allbut/naive_engine.hpp"

#include <vector>

namespace allbut {

namespace {

NimSequence literal_prefix(const FesSet& x, Pile n_max) {
  NimSequence seq{{}, EngineKind::literal};
  seq.values.reserve(n_max + 1);
  std::vector<char> seen;
  for (Pile n = 0; n <= n_max; ++n) {
    seen.assign(n + 2, 0);
    for (Pile take = 1; take <= n; ++take)
      if (!x.contains(take)) seen[seq.values[n - take]] = 1;
    NimValue mex = 0;
    while (seen[mex]) ++mex;
    seq.values.push_back(mex);
  }
  return seq;
}

// The options of n are every m < n except m = n - x. A value v below the
// frontier K (smallest value not yet seen) is missing from the options iff all
// of its occurrences sit at excluded positions, so only the values G(n - x)
// need a closer look.
NimSequence counting_prefix(const FesSet& x, Pile n_max) {
  const auto elems = x.elements();
  NimSequence seq{{}, EngineKind::naive};
  auto& g = seq.values;
  g.reserve(n_max + 1);
  std::vector<Pile> count;  // occurrences of each value among piles < n
  count.reserve(n_max / 2 + 2);
  NimValue frontier = 0;

  for (Pile n = 0; n <= n_max; ++n) {
    NimValue mex = frontier;
    for (Pile d : elems) {
      if (d > n) break;
      const NimValue v = g[n - d];
      if (v >= mex) continue;
      Pile excluded_hits = 0;
      for (Pile e : elems) {
        if (e > n) break;
        if (g[n - e] == v) ++excluded_hits;
      }
      if (count[v] == excluded_hits) mex = v;
    }
    g.push_back(mex);
    if (mex >= count.size()) count.resize(mex + 1, 0);
    ++count[mex];
    while (frontier < count.size() && count[frontier] > 0) ++frontier;
  }
  return seq;
}

}  // namespace

NimSequence grundy_prefix(const FesSet& x, Pile n_max,
                          const NaiveOptions& options) {
  if (n_max >= options.cap)
    throw Error(ErrorKind::resource_cap,
                "requested " + std::to_string(n_max) + "+1 piles exceeds cap " +
                    std::to_string(options.cap));
  return options.literal ? literal_prefix(x, n_max) : counting_prefix(x, n_max);
}

}  // namespace allbut
