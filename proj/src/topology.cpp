#include "minflood/topology.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace minflood {

namespace {

// Union-find with path compression; inputs here are tiny, no rank needed.
class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) {
    for (int i = 0; i < n; ++i) parent_[i] = i;
  }

  int find(int x) {
    int root = x;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[x] != root) x = std::exchange(parent_[x], root);
    return root;
  }

  void unite(int a, int b) { parent_[find(a)] = find(b); }

 private:
  std::vector<int> parent_;
};

[[noreturn]] void bad_topology(const std::string& what) {
  throw std::invalid_argument("topology: " + what);
}

}  // namespace

RoundTopology make_topology(int n, std::vector<Edge> edges) {
  for (auto& [a, b] : edges) {
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  RoundTopology topo{n, std::move(edges)};
  validate_topology(topo);
  return topo;
}

void validate_topology(const RoundTopology& topo) {
  if (topo.n < 1) bad_topology("process count must be positive");
  const Edge* prev = nullptr;
  for (const Edge& e : topo.edges) {
    if (e.first == e.second) bad_topology("self-loop at vertex " + std::to_string(e.first));
    if (e.first < 0 || e.second < 0 || e.first >= topo.n || e.second >= topo.n)
      bad_topology("edge " + std::to_string(e.first) + "-" + std::to_string(e.second) +
                   " out of range for n=" + std::to_string(topo.n));
    if (e.first > e.second) bad_topology("edge endpoints not normalized");
    if (prev != nullptr && !(*prev < e)) bad_topology("edges not sorted and unique");
    prev = &e;
  }
}

ComponentLabeling count_components(const RoundTopology& topo) {
  validate_topology(topo);
  UnionFind uf(topo.n);
  for (const auto& [a, b] : topo.edges) uf.unite(a, b);

  ComponentLabeling out;
  out.labels.assign(topo.n, -1);
  std::vector<int> root_label(topo.n, -1);
  for (int v = 0; v < topo.n; ++v) {
    int root = uf.find(v);
    if (root_label[root] < 0) root_label[root] = out.count++;
    out.labels[v] = root_label[root];
  }
  return out;
}

PartitionCheck validate_p_partitioned(const RoundTopology& topo, int p) {
  if (p < 1) throw std::invalid_argument("partition bound p must be positive");
  int count = count_components(topo).count;
  return PartitionCheck{count <= p, count};
}

std::vector<Edge> all_vertex_pairs(int n) {
  std::vector<Edge> pairs;
  pairs.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  return pairs;
}

std::vector<RoundTopology> enumerate_topologies(int n, int max_components) {
  if (n < 1) throw std::invalid_argument("enumerate_topologies: n must be positive");
  if (n > 6) throw std::invalid_argument("enumerate_topologies: n > 6 is not tractable");
  const std::vector<Edge> pairs = all_vertex_pairs(n);
  const unsigned long total = 1ul << pairs.size();

  std::vector<RoundTopology> out;
  for (unsigned long mask = 0; mask < total; ++mask) {
    std::vector<Edge> edges;
    for (size_t bit = 0; bit < pairs.size(); ++bit)
      if (mask & (1ul << bit)) edges.push_back(pairs[bit]);
    // pairs are generated sorted, so any subset is already canonical
    RoundTopology topo{n, std::move(edges)};
    if (count_components(topo).count <= max_components) out.push_back(std::move(topo));
  }
  return out;
}

std::string format_edges(const RoundTopology& topo) {
  std::ostringstream os;
  for (size_t i = 0; i < topo.edges.size(); ++i) {
    if (i > 0) os << ',';
    os << topo.edges[i].first << '-' << topo.edges[i].second;
  }
  return os.str();
}

std::string format_topology_line(long round, const RoundTopology& topo) {
  return "round=" + std::to_string(round) + " edges=" + format_edges(topo);
}

RoundTopology parse_edges(int n, const std::string& text) {
  std::vector<Edge> edges;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t end = text.find(',', pos);
    if (end == std::string::npos) end = text.size();
    const std::string token = text.substr(pos, end - pos);
    const size_t dash = token.find('-');
    if (dash == std::string::npos || dash == 0 || dash + 1 == token.size())
      bad_topology("malformed edge token '" + token + "'");
    try {
      edges.emplace_back(std::stoi(token.substr(0, dash)), std::stoi(token.substr(dash + 1)));
    } catch (const std::exception&) {
      bad_topology("malformed edge token '" + token + "'");
    }
    pos = end + 1;
  }
  return make_topology(n, std::move(edges));
}

RoundTopology parse_topology_line(int n, const std::string& line, long* round_out) {
  std::istringstream is(line);
  std::string round_tok, edges_tok;
  if (!(is >> round_tok) || round_tok.rfind("round=", 0) != 0)
    bad_topology("expected 'round=<t>' in line '" + line + "'");
  if (!(is >> edges_tok)) edges_tok = "edges=";
  if (edges_tok.rfind("edges=", 0) != 0)
    bad_topology("expected 'edges=...' in line '" + line + "'");
  try {
    long round = std::stol(round_tok.substr(6));
    if (round_out != nullptr) *round_out = round;
  } catch (const std::exception&) {
    bad_topology("malformed round number in line '" + line + "'");
  }
  return parse_edges(n, edges_tok.substr(6));
}

}  // namespace minflood
