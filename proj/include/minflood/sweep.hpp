#pragma once

#include <string>
#include <vector>

#include "minflood/runner.hpp"
#include "minflood/scenario.hpp"

namespace minflood {

// (ranges live in scenario.hpp's SweepSpec; an explicitly empty range yields
// an empty table)

/// Aggregated results for one parameter combination.
struct SweepPoint {
  int n = 0;
  int p = 0;
  double epsilon = 0.0;
  long k = -1;
  long gamma = -1;
  int trials = 0;
  long worst_merge_round = 0;  // max over trials of the first t with |S(t)| <= level
  long worst_rounds_used = 0;
  int max_agreement_k = 0;
  int target_k = 0;
  int failures = 0;  // aborted or otherwise failed runs
  bool ok = false;   // every trial met the agreement target and none failed
};

enum class SweepMode { Serial, Parallel };

/// Runs the cartesian product of the ranges (empty range = base value),
/// `trials` runs per point, seeded as base_seed + 1000003*point + trial so
/// adding points or trials never perturbs existing ones. Hard failures are
/// recorded per point without aborting the sweep. The parallel mode runs
/// trials concurrently and merges by index, so both modes emit identical
/// tables.
std::vector<SweepPoint> run_sweep(const SweepSpec& spec, SweepMode mode = SweepMode::Parallel);

/// One "point ..." line per combination, in sweep order.
std::string format_sweep_table(const SweepSpec& spec, const std::vector<SweepPoint>& points);

}  // namespace minflood
