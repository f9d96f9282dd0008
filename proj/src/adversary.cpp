#include "minflood/adversary.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "minflood/analysis.hpp"

namespace minflood {

namespace {

RoundTopology path_topology(int n) {
  std::vector<Edge> edges;
  edges.reserve(n > 0 ? n - 1 : 0);
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return RoundTopology{n, std::move(edges)};
}

std::vector<RoundTopology> greedy_candidates(int n, int p, int budget, Rng& rng) {
  if (n <= kGreedyExhaustiveCutoff) return enumerate_topologies(n, p);
  std::vector<RoundTopology> candidates;
  candidates.reserve(budget);
  for (int i = 0; i < budget; ++i) candidates.push_back(random_p_partitioned_topology(n, p, rng));
  return candidates;
}

bool better_candidate(long phi, const RoundTopology& topo, long best_phi,
                      const RoundTopology& best) {
  return phi < best_phi || (phi == best_phi && topo.edges < best.edges);
}

}  // namespace

RoundTopology StaticPathStrategy::next_topology(const AdversaryContext& ctx) const {
  return path_topology(ctx.n);
}

RoundTopology ScriptedStrategy::next_topology(const AdversaryContext& ctx) const {
  if (ctx.round < 0 || ctx.round >= static_cast<long>(schedule_.size()))
    throw std::runtime_error("scripted schedule exhausted at round " + std::to_string(ctx.round));
  return schedule_[ctx.round];
}

RoundTopology random_p_partitioned_topology(int n, int p, Rng& rng) {
  if (n < 1 || p < 1) throw std::invalid_argument("random topology: n and p must be positive");
  const int parts = 1 + static_cast<int>(rng_below(rng, std::min(n, p)));

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  deterministic_shuffle(order, rng);

  // the first `parts` shuffled vertices seed the blocks, so none is empty
  std::vector<std::vector<int>> blocks(parts);
  for (int i = 0; i < n; ++i) {
    const int block = i < parts ? i : static_cast<int>(rng_below(rng, parts));
    blocks[block].push_back(order[i]);
  }

  std::vector<Edge> edges;
  for (const std::vector<int>& members : blocks) {
    for (size_t j = 1; j < members.size(); ++j)
      edges.emplace_back(members[j], members[rng_below(rng, j)]);
    for (size_t j = 0; j < members.size(); ++j)
      for (size_t l = j + 1; l < members.size(); ++l)
        if (rng_below(rng, 4) == 0) edges.emplace_back(members[j], members[l]);
  }
  return make_topology(n, std::move(edges));
}

RoundTopology RandomPartitionStrategy::next_topology(const AdversaryContext& ctx) const {
  return random_p_partitioned_topology(ctx.n, ctx.p, *ctx.rng);
}

long phi_after_round(std::span<const ProcessState> states, const RoundTopology& topo, int level) {
  const std::vector<Value> mins = current_mins(states);
  std::vector<Value> next = mins;
  for (const auto& [a, b] : topo.edges) {
    if (!states[a].has_decided()) next[a] = std::min(next[a], mins[b]);
    if (!states[b].has_decided()) next[b] = std::min(next[b], mins[a]);
  }
  return potential(next, level);
}

RoundTopology greedy_min_phi_topology_serial(std::span<const ProcessState> states, int p,
                                             int level, int candidate_budget, Rng& rng) {
  const int n = static_cast<int>(states.size());
  const std::vector<RoundTopology> candidates = greedy_candidates(n, p, candidate_budget, rng);
  if (candidates.empty()) throw std::runtime_error("greedy adversary: no legal topology");

  size_t best = 0;
  long best_phi = phi_after_round(states, candidates[0], level);
  for (size_t i = 1; i < candidates.size(); ++i) {
    const long phi = phi_after_round(states, candidates[i], level);
    if (better_candidate(phi, candidates[i], best_phi, candidates[best])) {
      best = i;
      best_phi = phi;
    }
  }
  return candidates[best];
}

RoundTopology greedy_min_phi_topology(std::span<const ProcessState> states, int p, int level,
                                      int candidate_budget, Rng& rng) {
  const int n = static_cast<int>(states.size());
  const std::vector<RoundTopology> candidates = greedy_candidates(n, p, candidate_budget, rng);
  if (candidates.empty()) throw std::runtime_error("greedy adversary: no legal topology");

  size_t global_best = 0;
  long global_phi = phi_after_round(states, candidates[0], level);
#pragma omp parallel
  {
    size_t best = 0;
    long best_phi = phi_after_round(states, candidates[0], level);
#pragma omp for nowait
    for (long i = 1; i < static_cast<long>(candidates.size()); ++i) {
      const long phi = phi_after_round(states, candidates[i], level);
      if (better_candidate(phi, candidates[i], best_phi, candidates[best])) {
        best = static_cast<size_t>(i);
        best_phi = phi;
      }
    }
#pragma omp critical
    {
      if (better_candidate(best_phi, candidates[best], global_phi, candidates[global_best])) {
        global_best = best;
        global_phi = best_phi;
      }
    }
  }
  return candidates[global_best];
}

RoundTopology GreedyMinPhiStrategy::next_topology(const AdversaryContext& ctx) const {
  return greedy_min_phi_topology(ctx.states, ctx.p, level_, candidate_budget_, *ctx.rng);
}

void PhasedPathParams::validate() const {
  if (k < 1) throw std::invalid_argument("phased path: k must be positive");
  if (segment_halfwidth < 1) throw std::invalid_argument("phased path: t must be positive");
  if (quiet_period < 1) throw std::invalid_argument("phased path: T must be positive");
  if (segment_halfwidth <= k * quiet_period)
    throw std::invalid_argument("phased path: requires t > k*T so no foreign value reaches a "
                                "segment middle before its phase");
}

RoundTopology phased_path_topology(const PhasedPathParams& params, long round) {
  params.validate();
  if (round < 0 || round >= params.horizon())
    throw std::out_of_range("phased path: round " + std::to_string(round) +
                            " is past the construction horizon " + std::to_string(params.horizon()));

  const int segment = 2 * params.segment_halfwidth + 1;
  const int n = params.process_count();
  const int phase = static_cast<int>(round / params.quiet_period) + 1;  // 1-based
  const int isolated = (phase - 1) * segment + params.segment_halfwidth;

  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (int i = 0; i + 1 < n; ++i)
    if (i + 1 != isolated && i != isolated) edges.emplace_back(i, i + 1);
  edges.emplace_back(isolated - 1, isolated + 1);
  return make_topology(n, std::move(edges));
}

RoundTopology PhasedPathStrategy::next_topology(const AdversaryContext& ctx) const {
  if (ctx.n != params_.process_count())
    throw std::runtime_error("phased path: scenario n does not match (k+1)(2t+1)");
  return phased_path_topology(params_, ctx.round);
}

}  // namespace minflood
