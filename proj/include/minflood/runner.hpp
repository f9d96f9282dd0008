#pragma once

#include "minflood/scenario.hpp"
#include "minflood/trace.hpp"

namespace minflood {

/// Executes a scenario in lockstep rounds: the adversary emits a topology
/// (validated against p), every process broadcasts its current minimum, every
/// process receives the multiset of its neighbors' messages and steps. Runs
/// until every process has decided or the horizon is reached. Deterministic:
/// identical scenarios yield byte-identical traces. An adversary contract
/// violation aborts the run with the offending round recorded.
ExecutionTrace run(const Scenario& scenario);

/// Exit-code predicate: the verdict meets the scenario's agreement target,
/// with validity and termination. Scenarios declaring expect_disagreement
/// invert the agreement clause (they succeed when agreement_k exceeds the
/// target). Aborted runs never succeed.
bool run_succeeded(const ExecutionTrace& trace);

}  // namespace minflood
