#include "minflood/analysis.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace minflood {

namespace {

void check_level(int level) {
  if (level < 1) throw std::invalid_argument("analysis: level must be positive");
}

bool is_subset(const std::vector<Value>& inner, const std::vector<Value>& outer) {
  // both ascending
  return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

}  // namespace

std::vector<Value> current_mins(std::span<const ProcessState> states) {
  std::vector<Value> mins;
  mins.reserve(states.size());
  for (const ProcessState& s : states) mins.push_back(s.current_min);
  return mins;
}

ValueClasses value_classes(const std::vector<Value>& mins) {
  ValueClasses out;
  std::vector<Value> sorted = mins;
  std::sort(sorted.begin(), sorted.end());
  for (size_t i = 0; i < sorted.size(); ++i) {
    if (i == 0 || sorted[i] != sorted[i - 1]) {
      out.distinct_values.push_back(sorted[i]);
      out.class_sizes.push_back(1);
    } else {
      out.class_sizes.back() += 1;
    }
  }
  int running = 0;
  out.prefix_counts.reserve(out.class_sizes.size());
  for (int size : out.class_sizes) {
    running += size;
    out.prefix_counts.push_back(running);
  }
  return out;
}

ValueClasses value_classes(std::span<const ProcessState> states) {
  return value_classes(current_mins(states));
}

long potential(const std::vector<Value>& mins, int level) {
  check_level(level);
  const ValueClasses classes = value_classes(mins);
  long phi = 0;
  const int ranks = std::min<int>(level, static_cast<int>(classes.class_sizes.size()));
  for (int i = 0; i < ranks; ++i) phi += static_cast<long>(level - i) * classes.class_sizes[i];
  return phi;
}

long potential(std::span<const ProcessState> states, int level) {
  return potential(current_mins(states), level);
}

long prefix_count_padded(const ValueClasses& classes, int rank) {
  if (rank < 1) throw std::invalid_argument("prefix_count_padded: rank is 1-based");
  const int idx = std::min<int>(rank, static_cast<int>(classes.prefix_counts.size()));
  return idx == 0 ? 0 : classes.prefix_counts[idx - 1];
}

RoundTopology quotient_graph(const std::vector<Value>& mins, const RoundTopology& topo,
                             int level) {
  check_level(level);
  if (static_cast<int>(mins.size()) != topo.n)
    throw std::invalid_argument("quotient_graph: states and topology disagree on n");

  const ValueClasses classes = value_classes(mins);
  // class of a process = rank of its value, with everything past the level
  // folded into the residual class
  std::vector<int> class_of(mins.size());
  for (size_t v = 0; v < mins.size(); ++v) {
    const auto it =
        std::lower_bound(classes.distinct_values.begin(), classes.distinct_values.end(), mins[v]);
    const int rank = static_cast<int>(it - classes.distinct_values.begin());
    class_of[v] = std::min(rank, level);
  }
  const int num_classes = std::min<int>(static_cast<int>(classes.distinct_values.size()), level + 1);

  std::vector<Edge> edges;
  for (const auto& [a, b] : topo.edges) {
    const int ca = class_of[a], cb = class_of[b];
    if (ca != cb) edges.emplace_back(std::min(ca, cb), std::max(ca, cb));
  }
  return make_topology(num_classes, std::move(edges));
}

RoundTopology quotient_graph(std::span<const ProcessState> states, const RoundTopology& topo,
                             int level) {
  return quotient_graph(current_mins(states), topo, level);
}

long phi_increase_lower_bound(const RoundTopology& quotient) {
  return quotient.n - count_components(quotient).count;
}

Verdict check_run(std::span<const ProcessState> final_states, const std::vector<Value>& inputs,
                  long rounds_used) {
  Verdict verdict;
  verdict.rounds_used = rounds_used;
  verdict.termination_ok = true;

  std::set<Value> decided;
  for (const ProcessState& s : final_states) {
    if (s.has_decided())
      decided.insert(*s.decided);
    else
      verdict.termination_ok = false;
  }
  verdict.decision_set.assign(decided.begin(), decided.end());
  verdict.agreement_k = static_cast<int>(verdict.decision_set.size());

  std::vector<Value> sorted_inputs = inputs;
  std::sort(sorted_inputs.begin(), sorted_inputs.end());
  verdict.validity_ok = is_subset(verdict.decision_set, sorted_inputs);
  return verdict;
}

Verdict check_run(const ExecutionTrace& trace, const std::vector<Value>& inputs) {
  return check_run(trace.final_states, inputs, static_cast<long>(trace.rounds.size()));
}

std::vector<std::string> lemma_violations(const ExecutionTrace& trace) {
  std::vector<std::string> violations;
  const int p = trace.header.p;
  const int n = trace.header.n;
  const int level = trace.header.level;
  const long phi_cap = static_cast<long>(p) * (n - p) + static_cast<long>(p) * (p - 1) / 2;

  std::vector<Value> sorted_inputs = trace.header.inputs;
  std::sort(sorted_inputs.begin(), sorted_inputs.end());
  sorted_inputs.erase(std::unique(sorted_inputs.begin(), sorted_inputs.end()),
                      sorted_inputs.end());

  auto complain = [&](long t, const std::string& what) {
    violations.push_back("round " + std::to_string(t) + ": " + what);
  };

  for (size_t i = 0; i < trace.rounds.size(); ++i) {
    const RoundRecord& rec = trace.rounds[i];
    const std::vector<Value>& next_mins =
        i + 1 < trace.rounds.size() ? trace.rounds[i + 1].mins : trace.final_snapshot.mins;
    const ValueClasses now = value_classes(rec.mins);
    const ValueClasses next = value_classes(next_mins);
    const int distinct_now = static_cast<int>(now.distinct_values.size());

    if (!is_subset(next.distinct_values, now.distinct_values))
      complain(rec.t, "S(t+1) is not a subset of S(t)");
    if (!is_subset(now.distinct_values, sorted_inputs))
      complain(rec.t, "a current minimum is not an input value");
    for (size_t v = 0; v < rec.mins.size(); ++v)
      if (next_mins[v] > rec.mins[v])
        complain(rec.t, "current_min increased at process " + std::to_string(v));
    for (int rank = 1; rank <= level; ++rank)
      if (prefix_count_padded(next, rank) < prefix_count_padded(now, rank))
        complain(rec.t, "A_" + std::to_string(rank) + " decreased");

    if (distinct_now > p && potential(rec.mins, p) > phi_cap)
      complain(rec.t, "phi exceeds the p(n-p) + p(p-1)/2 cap while |S(t)| > p");

    if (rec.decided_at_start == 0) {
      if (distinct_now > p && potential(next_mins, p) < potential(rec.mins, p) + 1)
        complain(rec.t, "phi at level p did not increase while |S(t)| > p");
      const long realized = potential(next_mins, level) - potential(rec.mins, level);
      if (realized < rec.quotient_bound)
        complain(rec.t, "realized phi increase below the quotient-graph bound");
    }
  }
  return violations;
}

}  // namespace minflood
