#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "minflood/protocol.hpp"
#include "minflood/topology.hpp"

namespace minflood {

/// Terminal record of a run: the three agreement conditions plus the round
/// count. agreement_k is the number of distinct decided values.
struct Verdict {
  int agreement_k = 0;
  std::vector<Value> decision_set;  // W, ascending
  bool validity_ok = false;         // W is a subset of the input values
  bool termination_ok = false;      // every process decided within the horizon
  long rounds_used = 0;
};

/// One executed round: the state at the start of the round, the topology the
/// adversary played, and the realized effect on the potential.
struct RoundRecord {
  long t = 0;
  RoundTopology topology;
  std::vector<Value> mins;      // current_min per process at the start of round t
  std::vector<Value> distinct;  // S(t), ascending
  int components = 0;
  long phi = 0;   // potential at the scenario's level, start of round t
  long dphi = 0;  // potential after the round minus phi
  long quotient_bound = 0;
  int decided_at_start = 0;
};

/// State snapshot after the final executed round (or the round-0 snapshot
/// when no rounds ran).
struct Snapshot {
  long t = 0;
  std::vector<Value> mins;
  std::vector<Value> distinct;
  long phi = 0;
};

struct TraceHeader {
  int n = 0;
  int p = 0;
  int level = 0;             // potential level: p, or k for the k-agreement variant
  std::string protocol;      // p_agreement | k_agreement | unknown_size
  long gamma = -1;           // known-bound budget in effect, -1 otherwise
  double epsilon = 0.0;      // k_agreement only
  long k = -1;               // k_agreement only
  int quiet_period = -1;     // unknown_size only
  std::string adversary;
  std::vector<std::pair<std::string, std::string>> adversary_params;
  std::uint64_t seed = 0;
  long horizon = 0;
  int target_k = 0;
  bool budget_override = false;
  bool expect_disagreement = false;
  std::vector<Value> inputs;
};

struct ExecutionTrace {
  TraceHeader header;
  std::vector<RoundRecord> rounds;
  Snapshot final_snapshot;
  std::vector<ProcessState> final_states;
  std::optional<Verdict> verdict;
  std::optional<long> abort_round;  // adversary contract violation, if any
  std::string abort_reason;
};

std::string format_value_list(const std::vector<Value>& values);
std::vector<Value> parse_value_list(const std::string& text);

// Line-oriented trace serialization, byte-stable for a given run:
//   header n=... p=... level=... protocol=... ... inputs=...
//   t=<t> phi=<phi> dphi=<d> S=<v,v,..> comps=<c> edges=<i-j,..>   (per round)
//   t=<R> phi=<phi> S=<v,v,..>                                     (final snapshot)
//   abort round=<t> reason=<text>                                  (only if aborted)
//   verdict agreement_k=<k> W=<v,..> validity=<b> termination=<b> rounds=<R>
std::string format_trace(const ExecutionTrace& trace);

/// A trace as read back from disk; per-round process states are not part of
/// the file format, so only file-level facts are represented.
struct ParsedRecord {
  long t = 0;
  long phi = 0;
  long dphi = 0;
  std::vector<Value> distinct;
  int components = 0;
  RoundTopology topology;
};

struct ParsedTrace {
  TraceHeader header;
  std::vector<ParsedRecord> rounds;
  Snapshot final_snapshot;
  Verdict verdict;
  std::optional<long> abort_round;
  std::string abort_reason;
};

/// Throws std::invalid_argument on malformed input.
ParsedTrace parse_trace(const std::string& text);

/// Re-verifies everything the file format allows: record numbering, the
/// phi/dphi chain, component recounts against the edge lists, the partition
/// bound, S(t) shrinkage, the potential lemmas, and verdict consistency.
/// Returns human-readable violations; empty means the trace checks out.
std::vector<std::string> check_trace(const ParsedTrace& trace);

}  // namespace minflood
