#include <algorithm>
#include <vector>

#include "doctest.h"
#include "minflood/adversary.hpp"
#include "minflood/analysis.hpp"

using namespace minflood;

namespace {

std::vector<ProcessState> states_with_mins(const std::vector<Value>& mins) {
  std::vector<ProcessState> states;
  for (Value v : mins) states.push_back(initial_state(v));
  return states;
}

AdversaryContext context_for(long round, const std::vector<ProcessState>& states, int p,
                             Rng* rng) {
  return AdversaryContext{round, states, static_cast<int>(states.size()), p, rng};
}

}  // namespace

TEST_CASE("static path plays the same path every round") {
  StaticPathStrategy strategy;
  const auto states = states_with_mins({1, 2, 3, 4});
  Rng rng(1);
  const RoundTopology expected = make_topology(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(strategy.next_topology(context_for(0, states, 2, &rng)) == expected);
  CHECK(strategy.next_topology(context_for(7, states, 2, &rng)) == expected);

  const auto one = states_with_mins({9});
  CHECK(strategy.next_topology(context_for(0, one, 1, &rng)) == make_topology(1, {}));
}

TEST_CASE("scripted strategy is a lookup with a hard end") {
  const std::vector<RoundTopology> schedule{
      make_topology(3, {{0, 1}}), make_topology(3, {{1, 2}}), make_topology(3, {{0, 2}})};
  ScriptedStrategy strategy(schedule);
  const auto states = states_with_mins({1, 2, 3});
  Rng rng(1);
  CHECK(strategy.next_topology(context_for(2, states, 2, &rng)) == schedule[2]);
  CHECK(strategy.next_topology(context_for(0, states, 2, &rng)) == schedule[0]);
  CHECK_THROWS(strategy.next_topology(context_for(3, states, 2, &rng)));
}

TEST_CASE("random partition topologies honor the bound and reproduce by seed") {
  Rng probe(99);
  for (int iter = 0; iter < 300; ++iter) {
    const int n = 1 + static_cast<int>(rng_below(probe, 20));
    const int p = 1 + static_cast<int>(rng_below(probe, 4));
    const RoundTopology topo = random_p_partitioned_topology(n, p, probe);
    CHECK(validate_p_partitioned(topo, p).ok);
  }

  Rng a(12345), b(12345);
  for (int iter = 0; iter < 40; ++iter)
    CHECK(random_p_partitioned_topology(12, 3, a) == random_p_partitioned_topology(12, 3, b));
}

TEST_CASE("greedy isolates the minimum holder on three processes") {
  const auto states = states_with_mins({1, 2, 3});
  Rng rng(1);
  const RoundTopology choice = greedy_min_phi_topology(states, 2, 2, 64, rng);
  CHECK(choice == make_topology(3, {{1, 2}}));
}

TEST_CASE("greedy takes the forced edge on two processes") {
  const auto states = states_with_mins({1, 2});
  Rng rng(1);
  const RoundTopology choice = greedy_min_phi_topology(states, 1, 1, 64, rng);
  CHECK(choice == make_topology(2, {{0, 1}}));
  // the forced merge raises the level-1 potential by one
  CHECK(phi_after_round(states, choice, 1) == potential(current_mins(states), 1) + 1);
}

TEST_CASE("greedy with agreement already reached still emits a legal topology") {
  const auto states = states_with_mins({4, 4, 4, 4});
  Rng rng(7);
  const RoundTopology choice = greedy_min_phi_topology(states, 2, 2, 64, rng);
  CHECK(validate_p_partitioned(choice, 2).ok);
}

TEST_CASE("greedy on four distinct values matches exhaustive minimization") {
  const std::vector<Value> mins{1, 2, 3, 4};
  const auto states = states_with_mins(mins);
  Rng rng(1);
  const RoundTopology choice = greedy_min_phi_topology(states, 2, 2, 64, rng);

  // replay every legal topology by hand
  long best = potential(mins, 2) + 100;
  for (const RoundTopology& topo : enumerate_topologies(4, 2)) {
    std::vector<Value> next = mins;
    for (const auto& [a, b] : topo.edges) {
      next[a] = std::min(next[a], mins[b]);
      next[b] = std::min(next[b], mins[a]);
    }
    best = std::min(best, potential(next, 2));
  }
  CHECK(phi_after_round(states, choice, 2) == best);
  CHECK(validate_p_partitioned(choice, 2).ok);
}

TEST_CASE("greedy choice is exhaustively optimal for n <= 4") {
  Rng rng(53);
  for (int iter = 0; iter < 60; ++iter) {
    const int n = 2 + static_cast<int>(rng_below(rng, 3));
    const int p = 1 + static_cast<int>(rng_below(rng, static_cast<std::uint64_t>(n)));
    const int level = p;
    std::vector<Value> mins;
    for (int i = 0; i < n; ++i) mins.push_back(static_cast<Value>(rng_below(rng, 5)));
    const auto states = states_with_mins(mins);

    Rng greedy_rng(1);
    const RoundTopology choice = greedy_min_phi_topology(states, p, level, 64, greedy_rng);

    // independent minimization: replay one flooding round for every legal topology
    long best = potential(mins, level) + static_cast<long>(level) * n + 1;
    for (const RoundTopology& topo : enumerate_topologies(n, p)) {
      std::vector<Value> next = mins;
      for (const auto& [a, b] : topo.edges) {
        next[a] = std::min(next[a], mins[b]);
        next[b] = std::min(next[b], mins[a]);
      }
      best = std::min(best, potential(next, level));
    }
    CHECK(phi_after_round(states, choice, level) == best);
  }
}

TEST_CASE("greedy parallel evaluation matches the serial reference") {
  Rng seeds(61);
  for (int iter = 0; iter < 20; ++iter) {
    const int n = 5 + static_cast<int>(rng_below(seeds, 10));
    const int p = 1 + static_cast<int>(rng_below(seeds, 3));
    std::vector<Value> mins;
    for (int i = 0; i < n; ++i) mins.push_back(static_cast<Value>(rng_below(seeds, 8)));
    const auto states = states_with_mins(mins);

    Rng a(777 + iter), b(777 + iter);
    CHECK(greedy_min_phi_topology(states, p, p, 100, a) ==
          greedy_min_phi_topology_serial(states, p, p, 100, b));
  }
}

TEST_CASE("phased path construction") {
  PhasedPathParams params;
  params.k = 1;
  params.segment_halfwidth = 2;
  params.quiet_period = 1;
  REQUIRE(params.process_count() == 10);

  SUBCASE("phase 1 isolates the middle of the first segment") {
    const RoundTopology topo = phased_path_topology(params, 0);
    RoundTopology expected = make_topology(
        10, {{0, 1}, {1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 9}});
    CHECK(topo == expected);
  }
  SUBCASE("phase 2 isolates the middle of the second segment") {
    const RoundTopology topo = phased_path_topology(params, 1);
    RoundTopology expected = make_topology(
        10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 8}, {8, 9}});
    CHECK(topo == expected);
  }
  SUBCASE("every phase yields exactly two components") {
    PhasedPathParams demo;
    demo.k = 2;
    demo.segment_halfwidth = 5;
    demo.quiet_period = 2;
    for (long round = 0; round < demo.horizon(); ++round) {
      const auto check = validate_p_partitioned(phased_path_topology(demo, round), 2);
      CHECK(check.components == 2);
    }
  }
  SUBCASE("rounds past the horizon are an error") {
    CHECK_THROWS(phased_path_topology(params, 2));
    CHECK_THROWS(phased_path_topology(params, -1));
  }
  SUBCASE("deterministic and state independent") {
    CHECK(phased_path_topology(params, 0) == phased_path_topology(params, 0));
  }
}

TEST_CASE("phased path parameters must satisfy t > k*T") {
  PhasedPathParams bad;
  bad.k = 2;
  bad.segment_halfwidth = 4;
  bad.quiet_period = 2;  // t = 4 <= k*T = 4
  CHECK_THROWS(bad.validate());
  bad.segment_halfwidth = 5;
  CHECK_NOTHROW(bad.validate());
}
