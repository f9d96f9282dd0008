#pragma once

#include <vector>

#include "minflood/protocol.hpp"
#include "minflood/topology.hpp"

namespace minflood {

/// Exhaustive search above this size is refused.
inline constexpr int kOracleMaxN = 4;

/// Worst case, over every adversary schedule that keeps at most p components
/// per round, of the first round t with |S(t)| <= p. Memoized depth-first
/// search over min-value vectors; every legal round strictly increases the
/// potential while |S(t)| > p, so the search always terminates. round_cap is
/// a safety valve: exceeding it throws instead of recursing forever.
long brute_force_worst_rounds_serial(int n, int p, const std::vector<Value>& inputs,
                                     long round_cap = 1000);

/// Same value; first-round topologies are explored in parallel with
/// per-thread memo tables and a max reduction.
long brute_force_worst_rounds(int n, int p, const std::vector<Value>& inputs,
                              long round_cap = 1000);

}  // namespace minflood
