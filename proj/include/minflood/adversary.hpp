#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "minflood/protocol.hpp"
#include "minflood/topology.hpp"

namespace minflood {

// mt19937_64 gives an implementation-independent stream; draws below go
// through rng_below so no stdlib distribution creeps into golden traces.
using Rng = std::mt19937_64;

inline std::uint64_t rng_below(Rng& rng, std::uint64_t m) { return m == 0 ? 0 : rng() % m; }

template <typename T>
void deterministic_shuffle(std::vector<T>& v, Rng& rng) {
  for (size_t i = v.size(); i > 1; --i)
    std::swap(v[i - 1], v[rng_below(rng, static_cast<std::uint64_t>(i))]);
}

/// Everything an adaptive adversary gets to see before picking a round's
/// edges: the full process states plus the model parameters. Read-only.
struct AdversaryContext {
  long round = 0;
  std::span<const ProcessState> states;
  int n = 0;
  int p = 0;
  Rng* rng = nullptr;  // per-run stream for randomized strategies
};

class AdversaryStrategy {
 public:
  virtual ~AdversaryStrategy() = default;
  virtual std::string_view name() const = 0;
  virtual RoundTopology next_topology(const AdversaryContext& ctx) const = 0;
};

/// Fixed path 0-1-...-(n-1) every round.
class StaticPathStrategy final : public AdversaryStrategy {
 public:
  std::string_view name() const override { return "static_path"; }
  RoundTopology next_topology(const AdversaryContext& ctx) const override;
};

/// Plays back an explicit per-round schedule; running past it is an error.
class ScriptedStrategy final : public AdversaryStrategy {
 public:
  explicit ScriptedStrategy(std::vector<RoundTopology> schedule)
      : schedule_(std::move(schedule)) {}
  std::string_view name() const override { return "scripted"; }
  RoundTopology next_topology(const AdversaryContext& ctx) const override;
  const std::vector<RoundTopology>& schedule() const { return schedule_; }

 private:
  std::vector<RoundTopology> schedule_;
};

/// Seed-reproducible random topology with at most p components: a uniform
/// block partition into at most min(p, n) nonempty parts, a random spanning
/// tree per part, plus a sprinkle of extra in-part edges.
class RandomPartitionStrategy final : public AdversaryStrategy {
 public:
  std::string_view name() const override { return "random_partition"; }
  RoundTopology next_topology(const AdversaryContext& ctx) const override;
};

RoundTopology random_p_partitioned_topology(int n, int p, Rng& rng);

/// Worst-case heuristic: picks, among candidate topologies, one minimizing
/// the potential after the round. Exhaustive for n <= 4, sampled otherwise.
class GreedyMinPhiStrategy final : public AdversaryStrategy {
 public:
  GreedyMinPhiStrategy(int level, int candidate_budget)
      : level_(level), candidate_budget_(candidate_budget) {}
  std::string_view name() const override { return "greedy_min_phi"; }
  RoundTopology next_topology(const AdversaryContext& ctx) const override;

 private:
  int level_;
  int candidate_budget_;
};

inline constexpr int kGreedyExhaustiveCutoff = 4;

/// Potential at `level` after playing one min-flooding round over topo.
long phi_after_round(std::span<const ProcessState> states, const RoundTopology& topo, int level);

/// Among candidates (all <=p-component graphs when n <= kGreedyExhaustiveCutoff,
/// otherwise candidate_budget sampled ones) returns a minimizer of the
/// post-round potential; ties break toward the lexicographically smallest
/// edge list. Candidate evaluation runs in parallel.
RoundTopology greedy_min_phi_topology(std::span<const ProcessState> states, int p, int level,
                                      int candidate_budget, Rng& rng);
/// Serial reference for the same search; identical result by construction.
RoundTopology greedy_min_phi_topology_serial(std::span<const ProcessState> states, int p,
                                             int level, int candidate_budget, Rng& rng);

/// Parameters of the phased isolation schedule: k+1 path segments of 2t+1
/// processes each, one segment middle isolated per phase, phases lasting
/// quiet_period rounds.
struct PhasedPathParams {
  int k = 1;                  // produces k+1 distinct decisions
  int segment_halfwidth = 1;  // t; segments have 2t+1 processes
  int quiet_period = 1;       // T; must match the protocol's quiet period

  int process_count() const { return (k + 1) * (2 * segment_halfwidth + 1); }
  long horizon() const { return static_cast<long>(k + 1) * quiet_period; }
  void validate() const;  // throws std::invalid_argument
};

/// Path over all processes with the middle vertex of the current phase's
/// segment isolated and its two path neighbors bridged; exactly 2 components.
/// Phase i covers rounds [(i-1)T, iT); rounds past (k+1)T are an error.
RoundTopology phased_path_topology(const PhasedPathParams& params, long round);

class PhasedPathStrategy final : public AdversaryStrategy {
 public:
  explicit PhasedPathStrategy(PhasedPathParams params) : params_(params) { params_.validate(); }
  std::string_view name() const override { return "phased_path"; }
  RoundTopology next_topology(const AdversaryContext& ctx) const override;
  const PhasedPathParams& params() const { return params_; }

 private:
  PhasedPathParams params_;
};

}  // namespace minflood
