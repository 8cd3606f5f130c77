#pragma once

// Reference engine: G(n) straight from the mex definition.

#include "allbut/core.hpp"

namespace allbut {

struct NaiveOptions {
  Pile cap = pile_cap_from_env();
  // Evaluate every option explicitly (quadratic). Debug/oracle use only.
  bool literal = false;
};

// G(0..n_max). Throws ErrorKind::resource_cap when n_max + 1 > cap.
NimSequence grundy_prefix(const FesSet& x, Pile n_max,
                          const NaiveOptions& options = {});

}  // namespace allbut
