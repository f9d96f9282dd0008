#include <set>
#include <vector>

#include "doctest.h"
#include "minflood/oracle.hpp"
#include "minflood/protocol.hpp"

using namespace minflood;

TEST_CASE("oracle on forced two-process instances") {
  // the single legal topology on n=2, p=1 merges in one round
  CHECK(brute_force_worst_rounds_serial(2, 1, {1, 2}) == 1);
  // with p=2 the inputs already satisfy |S| <= p
  CHECK(brute_force_worst_rounds_serial(2, 2, {1, 2}) == 0);
}

TEST_CASE("oracle respects duplicate inputs") {
  CHECK(brute_force_worst_rounds_serial(4, 1, {5, 5, 5, 5}) == 0);
  // one non-minimum holder must hear the minimum on any connected round
  CHECK(brute_force_worst_rounds_serial(3, 1, {2, 2, 7}) == 1);
}

TEST_CASE("oracle refuses sizes past the exhaustive cutoff") {
  CHECK_THROWS(brute_force_worst_rounds_serial(5, 2, {1, 2, 3, 4, 5}));
  CHECK_THROWS(brute_force_worst_rounds(5, 2, {1, 2, 3, 4, 5}));
  CHECK_THROWS(brute_force_worst_rounds_serial(3, 2, {1, 2}));
}

TEST_CASE("parallel search agrees with the serial reference everywhere") {
  for (int n = 1; n <= 4; ++n) {
    std::vector<Value> inputs;
    for (int i = 1; i <= n; ++i) inputs.push_back(i);
    for (int p = 1; p <= n; ++p) {
      const long serial = brute_force_worst_rounds_serial(n, p, inputs);
      const long parallel = brute_force_worst_rounds(n, p, inputs);
      CHECK(serial == parallel);
      CHECK(serial <= budget_p_agreement(n, p));
      CHECK(serial >= 0);
    }
  }
}

TEST_CASE("oracle is deterministic") {
  const std::vector<Value> inputs{1, 2, 3, 4};
  CHECK(brute_force_worst_rounds(4, 2, inputs) == brute_force_worst_rounds(4, 2, inputs));
}

TEST_CASE("worst case for four distinct values under one component is the full budget") {
  // p=1 keeps the graph connected, and an adversarial path delays the
  // minimum by one hop per round
  CHECK(brute_force_worst_rounds_serial(4, 1, {1, 2, 3, 4}) == 3);
  CHECK(budget_p_agreement(4, 1) == 3);
}
