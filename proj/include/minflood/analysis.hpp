#pragma once

#include <span>
#include <string>
#include <vector>

#include "minflood/protocol.hpp"
#include "minflood/topology.hpp"
#include "minflood/trace.hpp"

namespace minflood {

/// The distinct current minima S(t) with class sizes |V_i(t)| and prefix
/// counts A_i(t) = |V_1(t)| + ... + |V_i(t)|.
struct ValueClasses {
  std::vector<Value> distinct_values;
  std::vector<int> class_sizes;
  std::vector<int> prefix_counts;
};

std::vector<Value> current_mins(std::span<const ProcessState> states);

ValueClasses value_classes(const std::vector<Value>& mins);
ValueClasses value_classes(std::span<const ProcessState> states);

/// Potential at the given level: sum over i <= level of (level+1-i)*|V_i(t)|.
/// Classes past the level (the residual class) contribute zero.
long potential(const std::vector<Value>& mins, int level);
long potential(std::span<const ProcessState> states, int level);

/// Prefix count A_i padded past |S(t)|: A_i = n for i >= |S(t)|.
/// rank is 1-based.
long prefix_count_padded(const ValueClasses& classes, int rank);

/// Graph on the value classes V_1..V_{level+1}: one vertex per class (the
/// residual class collapses everything past the level), an edge wherever the
/// round topology joins members of two different classes.
RoundTopology quotient_graph(const std::vector<Value>& mins, const RoundTopology& topo, int level);
RoundTopology quotient_graph(std::span<const ProcessState> states, const RoundTopology& topo,
                             int level);

/// Guaranteed minimum potential increase for one round: the sum over
/// components of the quotient graph of (component size - 1).
long phi_increase_lower_bound(const RoundTopology& quotient);

/// Verdict over final states: W is the set of decided values, validity holds
/// iff W is contained in the inputs, termination iff every process decided.
Verdict check_run(std::span<const ProcessState> final_states, const std::vector<Value>& inputs,
                  long rounds_used);
Verdict check_run(const ExecutionTrace& trace, const std::vector<Value>& inputs);

/// Per-round checks of the convergence lemmas over a full trace:
///   - S(t+1) is a subset of S(t), and every min is one of the inputs
///   - each padded A_i is nondecreasing
///   - phi at level p is capped at p(n-p) + p(p-1)/2 while |S(t)| > p
///   - while no process has decided: |S(t)| > p forces phi(t+1) >= phi(t)+1
///     at level p, and the realized increase at the scenario's level is at
///     least the quotient-graph bound.
/// Returns one message per violated check; empty means all lemmas held.
std::vector<std::string> lemma_violations(const ExecutionTrace& trace);

}  // namespace minflood
