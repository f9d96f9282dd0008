#include <algorithm>
#include <vector>

#include "doctest.h"
#include "minflood/adversary.hpp"
#include "minflood/analysis.hpp"

using namespace minflood;

namespace {

std::vector<Value> random_mins(int n, Rng& rng, int spread) {
  std::vector<Value> mins;
  for (int i = 0; i < n; ++i) mins.push_back(static_cast<Value>(rng_below(rng, spread)));
  return mins;
}

}  // namespace

TEST_CASE("value classes") {
  SUBCASE("mixed multiplicities") {
    const ValueClasses classes = value_classes({1, 1, 2, 3});
    CHECK(classes.distinct_values == std::vector<Value>{1, 2, 3});
    CHECK(classes.class_sizes == std::vector<int>{2, 1, 1});
    CHECK(classes.prefix_counts == std::vector<int>{2, 3, 4});
  }
  SUBCASE("all equal") {
    const ValueClasses classes = value_classes({5, 5, 5, 5, 5, 5});
    CHECK(classes.distinct_values.size() == 1);
    CHECK(classes.class_sizes == std::vector<int>{6});
    CHECK(classes.prefix_counts == std::vector<int>{6});
  }
  SUBCASE("all distinct") {
    const ValueClasses classes = value_classes({9, 4, 6});
    CHECK(classes.class_sizes == std::vector<int>{1, 1, 1});
  }
}

TEST_CASE("potential") {
  CHECK(potential({1, 1, 2, 3}, 2) == 5);   // 2*2 + 1*1, third class weighs nothing
  CHECK(potential({7, 7, 7, 7, 7}, 3) == 15);  // level * n once agreement is reached
  CHECK(potential({1, 2, 3, 4, 5}, 3) == 6);   // p + (p-1) + ... + 1 for distinct inputs
  CHECK(potential({4, 2}, 1) == 1);
  CHECK_THROWS(potential({1, 2}, 0));
}

TEST_CASE("potential equals the sum of padded prefix counts") {
  Rng rng(37);
  for (int iter = 0; iter < 300; ++iter) {
    const int n = 1 + static_cast<int>(rng_below(rng, 12));
    const int level = 1 + static_cast<int>(rng_below(rng, 5));
    const std::vector<Value> mins = random_mins(n, rng, 6);
    const ValueClasses classes = value_classes(mins);
    long sum = 0;
    for (int rank = 1; rank <= level; ++rank) sum += prefix_count_padded(classes, rank);
    CHECK(potential(mins, level) == sum);
  }
}

TEST_CASE("quotient graph") {
  SUBCASE("single class collapses to one vertex") {
    const RoundTopology q = quotient_graph({3, 3, 3}, make_topology(3, {{0, 1}, {1, 2}}), 2);
    CHECK(q.n == 1);
    CHECK(q.edges.empty());
  }
  SUBCASE("two classes joined by one edge") {
    const RoundTopology q = quotient_graph({1, 2}, make_topology(2, {{0, 1}}), 1);
    CHECK(q.n == 2);
    CHECK(q.edges == std::vector<Edge>{{0, 1}});
  }
  SUBCASE("path over three classes is connected") {
    const RoundTopology q = quotient_graph(
        {1, 1, 2, 3, 3}, make_topology(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}), 3);
    CHECK(q.n == 3);
    CHECK(count_components(q).count == 1);
  }
  SUBCASE("residual class folds everything past the level") {
    const RoundTopology q = quotient_graph({1, 2, 3, 4}, make_topology(4, {{2, 3}}), 2);
    CHECK(q.n == 3);  // classes for values 1, 2 and the residual {3, 4}
    CHECK(q.edges.empty());  // the 3-4 edge stays inside the residual class
  }
}

TEST_CASE("quotient graph has at most as many components as the topology") {
  Rng rng(41);
  for (int iter = 0; iter < 200; ++iter) {
    const int n = 2 + static_cast<int>(rng_below(rng, 9));
    const int p = 1 + static_cast<int>(rng_below(rng, 3));
    const int level = 1 + static_cast<int>(rng_below(rng, 4));
    const RoundTopology topo = random_p_partitioned_topology(n, p, rng);
    const std::vector<Value> mins = random_mins(n, rng, 6);
    const RoundTopology q = quotient_graph(mins, topo, level);
    CHECK(count_components(q).count <= count_components(topo).count);
  }
}

TEST_CASE("phi increase lower bound") {
  // three classes in one component guarantee an increase of two
  CHECK(phi_increase_lower_bound(make_topology(3, {{0, 1}, {1, 2}})) == 2);
  // fully disconnected quotient guarantees nothing
  CHECK(phi_increase_lower_bound(make_topology(2, {})) == 0);
  CHECK(phi_increase_lower_bound(make_topology(1, {})) == 0);
}

TEST_CASE("populated level+1 classes with p components bound the increase by level+1-p") {
  Rng rng(43);
  for (int iter = 0; iter < 200; ++iter) {
    const int level = 1 + static_cast<int>(rng_below(rng, 4));
    const int p = 1 + static_cast<int>(rng_below(rng, 3));
    const int n = level + 1 + static_cast<int>(rng_below(rng, 6));
    std::vector<Value> mins;
    for (int i = 0; i < n; ++i) mins.push_back(i < level + 1 ? i : static_cast<Value>(rng_below(rng, n)));
    deterministic_shuffle(mins, rng);
    const RoundTopology topo = random_p_partitioned_topology(n, p, rng);
    const long bound = phi_increase_lower_bound(quotient_graph(mins, topo, level));
    CHECK(bound >= level + 1 - p);
  }
}

TEST_CASE("check_run verdicts") {
  SUBCASE("single decided process") {
    ProcessState s = initial_state(4);
    s.decided = 4;
    const Verdict v = check_run(std::vector<ProcessState>{s}, {4}, 0);
    CHECK(v.agreement_k == 1);
    CHECK(v.decision_set == std::vector<Value>{4});
    CHECK(v.validity_ok);
    CHECK(v.termination_ok);
    CHECK(v.rounds_used == 0);
  }
  SUBCASE("undecided process flips termination, not W") {
    ProcessState a = initial_state(1);
    a.decided = 1;
    ProcessState b = initial_state(2);
    const Verdict v = check_run(std::vector<ProcessState>{a, b}, {1, 2}, 5);
    CHECK(v.agreement_k == 1);
    CHECK_FALSE(v.termination_ok);
    CHECK(v.validity_ok);
  }
  SUBCASE("a decision outside the inputs breaks validity") {
    ProcessState a = initial_state(1);
    a.decided = 0;
    const Verdict v = check_run(std::vector<ProcessState>{a}, {1}, 1);
    CHECK_FALSE(v.validity_ok);
  }
  SUBCASE("duplicate decisions collapse into one W entry") {
    ProcessState a = initial_state(3);
    a.decided = 3;
    const Verdict v = check_run(std::vector<ProcessState>{a, a, a}, {3, 3, 3}, 2);
    CHECK(v.agreement_k == 1);
  }
}
