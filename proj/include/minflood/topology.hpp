#pragma once

#include <string>
#include <utility>
#include <vector>

namespace minflood {

using Edge = std::pair<int, int>;

/// Edge set for one synchronous round. Undirected, no self-loops; edges are
/// stored with first < second, sorted ascending and deduplicated.
struct RoundTopology {
  int n = 0;
  std::vector<Edge> edges;

  friend bool operator==(const RoundTopology&, const RoundTopology&) = default;
};

/// Normalizes endpoint order, sorts and deduplicates, then validates.
/// Throws std::invalid_argument on self-loops or out-of-range endpoints.
RoundTopology make_topology(int n, std::vector<Edge> edges);

/// Throws std::invalid_argument if the topology violates its invariants.
void validate_topology(const RoundTopology& topo);

/// Canonical labeling: component ids assigned in order of smallest member
/// index, so identical topologies always yield identical labelings.
struct ComponentLabeling {
  std::vector<int> labels;
  int count = 0;
};

ComponentLabeling count_components(const RoundTopology& topo);

struct PartitionCheck {
  bool ok = false;
  int components = 0;
};

/// ok iff the topology has at most p connected components.
PartitionCheck validate_p_partitioned(const RoundTopology& topo, int p);

/// All vertex pairs (i, j) with i < j, lexicographic.
std::vector<Edge> all_vertex_pairs(int n);

/// Every topology on n vertices with at most max_components components.
/// There are 2^(n(n-1)/2) candidate edge sets, so n is capped at 6.
std::vector<RoundTopology> enumerate_topologies(int n, int max_components);

// Trace serialization: "0-1,2-3" with pairs ascending, "" for no edges.
std::string format_edges(const RoundTopology& topo);
// "round=<t> edges=<i-j,i-j,...>"
std::string format_topology_line(long round, const RoundTopology& topo);

RoundTopology parse_edges(int n, const std::string& text);
// Parses a "round=<t> edges=..." line and stores t in round_out.
RoundTopology parse_topology_line(int n, const std::string& line, long* round_out);

}  // namespace minflood
