#include "minflood/runner.hpp"

#include <algorithm>

#include "minflood/analysis.hpp"

namespace minflood {

namespace {

constexpr std::uint64_t kAdversarySeedSalt = 0xbf58476d1ce4e5b9ull;

bool all_decided(const std::vector<ProcessState>& states) {
  return std::all_of(states.begin(), states.end(),
                     [](const ProcessState& s) { return s.has_decided(); });
}

Snapshot snapshot_of(const std::vector<ProcessState>& states, long t, int level) {
  Snapshot snap;
  snap.t = t;
  snap.mins = current_mins(states);
  snap.distinct = value_classes(snap.mins).distinct_values;
  snap.phi = potential(snap.mins, level);
  return snap;
}

}  // namespace

ExecutionTrace run(const Scenario& scenario) {
  ExecutionTrace trace;
  trace.header = make_header(scenario);

  std::vector<ProcessState> states;
  states.reserve(scenario.n);
  for (Value input : scenario.inputs) states.push_back(initial_state(input));

  // a zero budget means deciding on the input before any communication
  if (const auto* kb = std::get_if<KnownBound>(&scenario.protocol); kb != nullptr && kb->gamma == 0)
    for (ProcessState& s : states) s.decided = s.current_min;

  const std::unique_ptr<AdversaryStrategy> strategy = make_strategy(scenario);
  Rng rng(scenario.seed ^ kAdversarySeedSalt);

  for (long t = 0; t < scenario.horizon; ++t) {
    if (all_decided(states)) break;

    RoundTopology topo;
    try {
      topo = strategy->next_topology(AdversaryContext{t, states, scenario.n, scenario.p, &rng});
      const PartitionCheck check = validate_p_partitioned(topo, scenario.p);
      if (!check.ok)
        throw std::runtime_error("adversary produced " + std::to_string(check.components) +
                                 " components with p=" + std::to_string(scenario.p));
      if (topo.n != scenario.n)
        throw std::runtime_error("adversary produced a topology on the wrong vertex set");
    } catch (const std::exception& e) {
      trace.abort_round = t;
      trace.abort_reason = e.what();
      break;
    }

    RoundRecord rec;
    rec.t = t;
    rec.topology = topo;
    rec.mins = current_mins(states);
    const ValueClasses classes = value_classes(rec.mins);
    rec.distinct = classes.distinct_values;
    rec.components = count_components(topo).count;
    rec.phi = potential(rec.mins, scenario.level);
    rec.quotient_bound = phi_increase_lower_bound(quotient_graph(rec.mins, topo, scenario.level));
    rec.decided_at_start = static_cast<int>(std::count_if(
        states.begin(), states.end(), [](const ProcessState& s) { return s.has_decided(); }));

    std::vector<std::vector<Value>> received(states.size());
    for (const auto& [a, b] : topo.edges) {
      received[a].push_back(outgoing_message(states[b]));
      received[b].push_back(outgoing_message(states[a]));
    }
    for (size_t v = 0; v < states.size(); ++v)
      states[v] = step(states[v], received[v], scenario.protocol, t);

    rec.dphi = potential(states, scenario.level) - rec.phi;
    trace.rounds.push_back(std::move(rec));
  }

  trace.final_snapshot = snapshot_of(states, static_cast<long>(trace.rounds.size()), scenario.level);
  trace.final_states = std::move(states);
  trace.verdict = check_run(trace.final_states, scenario.inputs,
                            static_cast<long>(trace.rounds.size()));
  return trace;
}

bool run_succeeded(const ExecutionTrace& trace) {
  if (trace.abort_round.has_value() || !trace.verdict.has_value()) return false;
  const Verdict& v = *trace.verdict;
  if (trace.header.expect_disagreement)
    return v.agreement_k > trace.header.target_k && v.validity_ok;
  return v.agreement_k <= trace.header.target_k && v.validity_ok && v.termination_ok;
}

}  // namespace minflood
