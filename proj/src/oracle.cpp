#include "minflood/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace minflood {

namespace {

using Memo = std::map<std::vector<Value>, long>;

int distinct_count(const std::vector<Value>& mins) {
  return static_cast<int>(std::set<Value>(mins.begin(), mins.end()).size());
}

// One synchronous min-flooding round: every process adopts the smallest value
// among its own and its neighbors' previous values.
std::vector<Value> apply_round(const std::vector<Value>& mins, const RoundTopology& topo) {
  std::vector<Value> next = mins;
  for (const auto& [a, b] : topo.edges) {
    next[a] = std::min(next[a], mins[b]);
    next[b] = std::min(next[b], mins[a]);
  }
  return next;
}

long solve(const std::vector<Value>& mins, int p, const std::vector<RoundTopology>& topologies,
           Memo& memo, long cap) {
  if (distinct_count(mins) <= p) return 0;
  if (const auto it = memo.find(mins); it != memo.end()) return it->second;
  if (cap <= 0) throw std::runtime_error("oracle: search exceeded the round cap");

  long worst = 0;
  for (const RoundTopology& topo : topologies) {
    const long rounds = 1 + solve(apply_round(mins, topo), p, topologies, memo, cap - 1);
    worst = std::max(worst, rounds);
  }
  memo.emplace(mins, worst);
  return worst;
}

void check_args(int n, int p, const std::vector<Value>& inputs) {
  if (n < 1 || p < 1) throw std::invalid_argument("oracle: n and p must be positive");
  if (n > kOracleMaxN)
    throw std::invalid_argument("oracle: refused, n exceeds the exhaustive cutoff " +
                                std::to_string(kOracleMaxN));
  if (static_cast<int>(inputs.size()) != n)
    throw std::invalid_argument("oracle: inputs length differs from n");
}

}  // namespace

long brute_force_worst_rounds_serial(int n, int p, const std::vector<Value>& inputs,
                                     long round_cap) {
  check_args(n, p, inputs);
  if (distinct_count(inputs) <= p) return 0;
  const std::vector<RoundTopology> topologies = enumerate_topologies(n, p);
  Memo memo;
  return solve(inputs, p, topologies, memo, round_cap);
}

long brute_force_worst_rounds(int n, int p, const std::vector<Value>& inputs, long round_cap) {
  check_args(n, p, inputs);
  if (distinct_count(inputs) <= p) return 0;
  const std::vector<RoundTopology> topologies = enumerate_topologies(n, p);

  long worst = 0;
#pragma omp parallel
  {
    Memo memo;
#pragma omp for schedule(dynamic) reduction(max : worst)
    for (long i = 0; i < static_cast<long>(topologies.size()); ++i) {
      const long rounds =
          1 + solve(apply_round(inputs, topologies[i]), p, topologies, memo, round_cap - 1);
      worst = std::max(worst, rounds);
    }
  }
  return worst;
}

}  // namespace minflood
