#include <sstream>
#include <string>

#include "doctest.h"
#include "minflood/analysis.hpp"
#include "minflood/runner.hpp"
#include "minflood/scenario.hpp"

using namespace minflood;

namespace {

std::string random_run_config(Rng& rng) {
  const int n = 2 + static_cast<int>(rng_below(rng, 19));  // 2..20
  const int p = 1 + static_cast<int>(rng_below(rng, 4));   // 1..4
  const bool k_variant = rng_below(rng, 3) == 0;
  const bool random_inputs = rng_below(rng, 2) == 0;
  const std::uint64_t seed = rng();

  std::ostringstream os;
  os << "n = " << n << "\np = " << p << "\n";
  if (k_variant) {
    const double epsilons[] = {0.5, 1.0, 2.0};
    os << "protocol = k_agreement\nepsilon = " << epsilons[rng_below(rng, 3)] << "\n";
  } else {
    os << "protocol = p_agreement\n";
  }
  os << "adversary = random_partition\n";
  if (random_inputs) os << "inputs = random\n";
  os << "seed = " << seed << "\n";
  return os.str();
}

}  // namespace

TEST_CASE("convergence lemmas hold over randomized runs") {
  Rng rng(271828);
  int rounds_checked = 0;
  for (int iter = 0; iter < 80; ++iter) {
    const std::string config = random_run_config(rng);
    CAPTURE(config);
    const Scenario scenario = load_scenario_text(config);
    const ExecutionTrace trace = run(scenario);
    REQUIRE_FALSE(trace.abort_round.has_value());
    const auto violations = lemma_violations(trace);
    CAPTURE(violations.empty() ? std::string() : violations.front());
    CHECK(violations.empty());
    rounds_checked += static_cast<int>(trace.rounds.size());
  }
  CHECK(rounds_checked > 200);
}

TEST_CASE("lemma checks stay clean on greedy adversarial runs") {
  Rng rng(314159);
  for (int iter = 0; iter < 12; ++iter) {
    const int n = 2 + static_cast<int>(rng_below(rng, 11));
    const int p = 1 + static_cast<int>(rng_below(rng, 3));
    std::ostringstream os;
    os << "n = " << n << "\np = " << p
       << "\nprotocol = p_agreement\nadversary = greedy_min_phi\nseed = " << rng() << "\n";
    const ExecutionTrace trace = run(load_scenario_text(os.str()));
    CHECK(lemma_violations(trace).empty());
  }
}

TEST_CASE("lemma checks accommodate unknown-size runs with early deciders") {
  // isolated processes decide mid-run and freeze; the scoped checks must not
  // flag the rounds that follow
  const Scenario scenario = load_scenario_text(
      "n = 33\np = 2\nprotocol = unknown_size\nquiet_period = 2\n"
      "adversary = phased_path\nadversary.k = 2\nadversary.t = 5\n"
      "expect_disagreement = true\n");
  const ExecutionTrace trace = run(scenario);
  CHECK(lemma_violations(trace).empty());
}

TEST_CASE("lemma checker flags a manufactured violation") {
  const Scenario scenario = load_scenario_text(
      "n = 5\np = 2\nprotocol = p_agreement\nadversary = static_path\n");
  ExecutionTrace trace = run(scenario);
  REQUIRE(!trace.rounds.empty());
  trace.rounds.back().quotient_bound += 100;  // impossible guarantee
  CHECK_FALSE(lemma_violations(trace).empty());
}
