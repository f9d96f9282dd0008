#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "minflood/adversary.hpp"
#include "minflood/protocol.hpp"
#include "minflood/trace.hpp"

namespace minflood {

enum class InputsKind { Distinct, Random, BySegment, Explicit };

/// A fully resolved experiment description. Everything a run depends on is
/// here; two runs of an identical Scenario produce byte-identical traces.
struct Scenario {
  int n = 0;
  int p = 0;

  std::string protocol_name;  // p_agreement | k_agreement | unknown_size
  ProtocolVariant protocol = KnownBound{0};
  double epsilon = 0.0;  // k_agreement only
  long k = -1;           // k_agreement only
  long gamma = -1;       // known-bound budget in effect
  int quiet_period = -1; // unknown_size only

  std::string adversary;  // static_path | scripted | random_partition |
                          // greedy_min_phi | phased_path
  int candidate_budget = 200;
  std::optional<PhasedPathParams> phased;
  std::vector<RoundTopology> schedule;  // scripted only

  InputsKind inputs_kind = InputsKind::Distinct;
  std::vector<Value> inputs;  // resolved, length n

  std::uint64_t seed = 1;
  long horizon = 0;
  int level = 0;     // potential level used by the analytics
  int target_k = 0;  // agreement target the exit code is judged against
  bool budget_override = false;
  bool expect_disagreement = false;
};

/// Parses the flat key-value scenario format, applies defaults (round budget
/// from the formulas, distinct inputs 1..n, horizon) and validates every
/// invariant. Unknown or duplicate keys are rejected with the field named.
Scenario load_scenario_text(const std::string& text, const std::string& base_dir = ".");
Scenario load_scenario_file(const std::string& path);

/// Re-checks the horizon constraints after a CLI override.
void override_scenario(Scenario& scenario, std::optional<std::uint64_t> seed,
                       std::optional<long> horizon);

std::unique_ptr<AdversaryStrategy> make_strategy(const Scenario& scenario);
TraceHeader make_header(const Scenario& scenario);

/// Parameter ranges for sweeps; an absent range means "keep the base value".
struct SweepRanges {
  std::vector<int> n;
  std::vector<int> p;
  std::vector<double> epsilon;
  int trials = 1;
  bool declared_empty = false;  // a sweep.* key was given an empty range
};

struct SweepSpec {
  Scenario base;
  SweepRanges ranges;
};

/// Scenario file plus sweep.n / sweep.p / sweep.epsilon / sweep.trials keys.
SweepSpec load_sweep_text(const std::string& text, const std::string& base_dir = ".");
SweepSpec load_sweep_file(const std::string& path);

/// The per-point scenario a sweep runs: base with (n, p, epsilon) replaced,
/// budgets and defaults recomputed, and the trial seed applied.
Scenario sweep_point_scenario(const Scenario& base, int n, int p, double epsilon,
                              std::uint64_t seed);

}  // namespace minflood
