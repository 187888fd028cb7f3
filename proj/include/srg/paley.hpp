#pragma once

#include "srg/graph.hpp"

namespace srg {

/// Paley graph on GF(q): u ~ v iff u - v is a nonzero square.
///
/// Accepts primes q = 1 (mod 4) up to 61, and q = 9 via a fixed GF(3)[x]/(x^2+1)
/// table where element a + b*x is vertex 3a + b. Anything else throws InputError.
Graph paley_graph(int q);

} // namespace srg
