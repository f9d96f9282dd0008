#include "minflood/sweep.hpp"

#include <algorithm>
#include <sstream>

#include "minflood/analysis.hpp"

namespace minflood {

namespace {

constexpr std::uint64_t kPointSeedStride = 1000003;

struct TrialResult {
  bool failed = true;
  long merge_round = 0;
  long rounds_used = 0;
  int agreement_k = 0;
  bool met_target = false;
};

long first_merge_round(const ExecutionTrace& trace, int level) {
  for (const RoundRecord& rec : trace.rounds)
    if (static_cast<int>(rec.distinct.size()) <= level) return rec.t;
  if (static_cast<int>(trace.final_snapshot.distinct.size()) <= level)
    return trace.final_snapshot.t;
  return trace.final_snapshot.t + 1;  // never merged within the horizon
}

TrialResult run_trial(const Scenario& scenario) {
  TrialResult result;
  try {
    const ExecutionTrace trace = run(scenario);
    if (trace.abort_round.has_value() || !trace.verdict.has_value()) return result;
    result.failed = false;
    result.merge_round = first_merge_round(trace, scenario.level);
    result.rounds_used = trace.verdict->rounds_used;
    result.agreement_k = trace.verdict->agreement_k;
    result.met_target = run_succeeded(trace);
  } catch (const std::exception&) {
    result.failed = true;
  }
  return result;
}

}  // namespace

std::vector<SweepPoint> run_sweep(const SweepSpec& spec, SweepMode mode) {
  if (spec.ranges.declared_empty) return {};
  const std::vector<int> ns = spec.ranges.n.empty() ? std::vector<int>{spec.base.n} : spec.ranges.n;
  const std::vector<int> ps = spec.ranges.p.empty() ? std::vector<int>{spec.base.p} : spec.ranges.p;
  const std::vector<double> epsilons =
      spec.ranges.epsilon.empty() ? std::vector<double>{spec.base.epsilon} : spec.ranges.epsilon;
  const int trials = spec.ranges.trials;

  std::vector<SweepPoint> points;
  for (int n : ns)
    for (int p : ps)
      for (double eps : epsilons) {
        const size_t point_index = points.size();
        SweepPoint point;
        point.n = n;
        point.p = p;
        point.epsilon = eps;
        point.trials = trials;
        const Scenario probe = sweep_point_scenario(
            spec.base, n, p, eps, spec.base.seed + kPointSeedStride * point_index);
        point.k = probe.k;
        point.gamma = probe.gamma;
        point.target_k = probe.target_k;
        points.push_back(point);
      }

  std::vector<TrialResult> results(points.size() * static_cast<size_t>(trials));
  const long total = static_cast<long>(results.size());

  if (mode == SweepMode::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < total; ++i) {
      const size_t point_index = static_cast<size_t>(i) / trials;
      const int trial = static_cast<int>(i % trials);
      const SweepPoint& pt = points[point_index];
      results[i] = run_trial(sweep_point_scenario(
          spec.base, pt.n, pt.p, pt.epsilon,
          spec.base.seed + kPointSeedStride * point_index + static_cast<std::uint64_t>(trial)));
    }
  } else {
    for (long i = 0; i < total; ++i) {
      const size_t point_index = static_cast<size_t>(i) / trials;
      const int trial = static_cast<int>(i % trials);
      const SweepPoint& pt = points[point_index];
      results[i] = run_trial(sweep_point_scenario(
          spec.base, pt.n, pt.p, pt.epsilon,
          spec.base.seed + kPointSeedStride * point_index + static_cast<std::uint64_t>(trial)));
    }
  }

  for (size_t pi = 0; pi < points.size(); ++pi) {
    SweepPoint& point = points[pi];
    point.ok = true;
    for (int trial = 0; trial < trials; ++trial) {
      const TrialResult& r = results[pi * trials + trial];
      if (r.failed) {
        point.failures += 1;
        point.ok = false;
        continue;
      }
      point.worst_merge_round = std::max(point.worst_merge_round, r.merge_round);
      point.worst_rounds_used = std::max(point.worst_rounds_used, r.rounds_used);
      point.max_agreement_k = std::max(point.max_agreement_k, r.agreement_k);
      if (!r.met_target) point.ok = false;
    }
  }
  return points;
}

std::string format_sweep_table(const SweepSpec& spec, const std::vector<SweepPoint>& points) {
  std::ostringstream os;
  for (const SweepPoint& point : points) {
    os << "point n=" << point.n << " p=" << point.p;
    if (spec.base.protocol_name == "k_agreement") {
      os << " epsilon=" << point.epsilon << " k=" << point.k << " gamma=" << point.gamma;
    } else if (spec.base.protocol_name == "p_agreement") {
      os << " gamma=" << point.gamma;
    } else {
      os << " T=" << spec.base.quiet_period;
    }
    os << " trials=" << point.trials << " worst_merge_round=" << point.worst_merge_round
       << " worst_rounds_used=" << point.worst_rounds_used
       << " max_agreement_k=" << point.max_agreement_k << " target_k=" << point.target_k
       << " failures=" << point.failures << " ok=" << (point.ok ? "true" : "false") << '\n';
  }
  return os.str();
}

}  // namespace minflood
