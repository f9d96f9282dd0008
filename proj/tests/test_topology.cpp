#include <algorithm>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "minflood/adversary.hpp"
#include "minflood/topology.hpp"

using namespace minflood;

namespace {

RoundTopology random_topology(int n, Rng& rng) {
  std::vector<Edge> edges;
  for (const Edge& e : all_vertex_pairs(n))
    if (rng_below(rng, 3) == 0) edges.push_back(e);
  return make_topology(n, std::move(edges));
}

}  // namespace

TEST_CASE("count_components on small graphs") {
  SUBCASE("empty graph is all singletons") {
    const auto labeling = count_components(make_topology(3, {}));
    CHECK(labeling.count == 3);
    CHECK(labeling.labels == std::vector<int>{0, 1, 2});
  }
  SUBCASE("two disjoint edges") {
    const auto labeling = count_components(make_topology(4, {{0, 1}, {2, 3}}));
    CHECK(labeling.count == 2);
    CHECK(labeling.labels == std::vector<int>{0, 0, 1, 1});
  }
  SUBCASE("path plus separate edge") {
    const auto labeling = count_components(make_topology(5, {{0, 1}, {1, 2}, {3, 4}}));
    CHECK(labeling.count == 2);
    CHECK(labeling.labels == std::vector<int>{0, 0, 0, 1, 1});
  }
}

TEST_CASE("count_components rejects malformed topologies") {
  CHECK_THROWS_AS(count_components(RoundTopology{3, {{0, 3}}}), std::invalid_argument);
  CHECK_THROWS_AS(count_components(RoundTopology{3, {{1, 1}}}), std::invalid_argument);
  CHECK_THROWS_AS(count_components(RoundTopology{3, {{-1, 2}}}), std::invalid_argument);
  CHECK_THROWS_AS(count_components(RoundTopology{0, {}}), std::invalid_argument);
  CHECK_THROWS_AS(make_topology(2, {{0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(make_topology(2, {{1, 1}}), std::invalid_argument);
}

TEST_CASE("make_topology canonicalizes edge lists") {
  const auto canonical = make_topology(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(make_topology(4, {{3, 2}, {1, 0}, {2, 1}, {0, 1}}) == canonical);

  Rng rng(7);
  for (int iter = 0; iter < 50; ++iter) {
    const int n = 2 + static_cast<int>(rng_below(rng, 7));
    const RoundTopology topo = random_topology(n, rng);
    std::vector<Edge> shuffled = topo.edges;
    deterministic_shuffle(shuffled, rng);
    for (Edge& e : shuffled)
      if (rng_below(rng, 2) == 0) std::swap(e.first, e.second);
    CHECK(make_topology(n, shuffled) == topo);
    CHECK(count_components(make_topology(n, shuffled)).labels == count_components(topo).labels);
  }
}

TEST_CASE("validate_p_partitioned") {
  const auto two_pairs = make_topology(4, {{0, 1}, {2, 3}});
  CHECK(validate_p_partitioned(two_pairs, 2).ok);
  const auto violation = validate_p_partitioned(two_pairs, 1);
  CHECK_FALSE(violation.ok);
  CHECK(violation.components == 2);

  const auto path_with_isolated = make_topology(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  CHECK(validate_p_partitioned(path_with_isolated, 2).ok);
  CHECK(validate_p_partitioned(path_with_isolated, 2).components == 2);

  CHECK_THROWS_AS(validate_p_partitioned(two_pairs, 0), std::invalid_argument);
}

TEST_CASE("component count bounds and edge monotonicity") {
  Rng rng(11);
  for (int iter = 0; iter < 100; ++iter) {
    const int n = 1 + static_cast<int>(rng_below(rng, 8));
    const RoundTopology topo = random_topology(n, rng);
    const int count = count_components(topo).count;
    CHECK(count >= 1);
    CHECK(count <= n);

    std::vector<Edge> missing;
    for (const Edge& e : all_vertex_pairs(n))
      if (!std::binary_search(topo.edges.begin(), topo.edges.end(), e)) missing.push_back(e);
    if (missing.empty()) continue;

    auto extended = topo.edges;
    extended.push_back(missing[rng_below(rng, missing.size())]);
    const int grown = count_components(make_topology(n, extended)).count;
    // adding an edge never increases the count and removes at most one component
    CHECK(grown <= count);
    CHECK(grown >= count - 1);
  }
}

TEST_CASE("canonical labeling is deterministic and ordered by first member") {
  Rng rng(13);
  for (int iter = 0; iter < 50; ++iter) {
    const int n = 1 + static_cast<int>(rng_below(rng, 9));
    const RoundTopology topo = random_topology(n, rng);
    const auto a = count_components(topo);
    const auto b = count_components(topo);
    CHECK(a.labels == b.labels);
    CHECK(a.count == b.count);

    // first occurrences of labels appear in increasing order
    int next_fresh = 0;
    for (int label : a.labels) {
      CHECK(label <= next_fresh);
      if (label == next_fresh) ++next_fresh;
    }
    CHECK(next_fresh == a.count);
  }
}

TEST_CASE("edge serialization round-trips") {
  CHECK(format_edges(make_topology(3, {})) == "");
  CHECK(format_edges(make_topology(4, {{2, 3}, {0, 1}})) == "0-1,2-3");
  CHECK(format_topology_line(3, make_topology(4, {{0, 1}})) == "round=3 edges=0-1");

  long round = -1;
  CHECK(parse_topology_line(4, "round=3 edges=0-1", &round) == make_topology(4, {{0, 1}}));
  CHECK(round == 3);
  CHECK(parse_topology_line(2, "round=0 edges=", &round) == make_topology(2, {}));

  Rng rng(17);
  for (int iter = 0; iter < 50; ++iter) {
    const int n = 1 + static_cast<int>(rng_below(rng, 8));
    const RoundTopology topo = random_topology(n, rng);
    CHECK(parse_edges(n, format_edges(topo)) == topo);
  }

  CHECK_THROWS_AS(parse_edges(4, "0-1,oops"), std::invalid_argument);
  CHECK_THROWS_AS(parse_edges(4, "0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_edges(2, "0-5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_topology_line(2, "edges=0-1", nullptr), std::invalid_argument);
}

TEST_CASE("enumerate_topologies matches known counts") {
  // labeled connected graphs: 4 on 3 vertices, 38 on 4 vertices
  CHECK(enumerate_topologies(3, 1).size() == 4);
  CHECK(enumerate_topologies(4, 1).size() == 38);
  // on 4 vertices only the empty graph (4 comps) and the 6 single-edge
  // graphs (3 comps) exceed two components
  CHECK(enumerate_topologies(4, 2).size() == 57);
  CHECK(enumerate_topologies(3, 3).size() == 8);

  for (const RoundTopology& topo : enumerate_topologies(4, 2))
    CHECK(count_components(topo).count <= 2);

  CHECK_THROWS_AS(enumerate_topologies(7, 1), std::invalid_argument);
}
