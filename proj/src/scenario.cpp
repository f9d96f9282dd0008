#include "minflood/scenario.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace minflood {

namespace {

constexpr std::uint64_t kInputSeedSalt = 0x9e3779b97f4a7c15ull;

[[noreturn]] void bad_config(const std::string& what) {
  throw std::invalid_argument("scenario: " + what);
}

std::string trim(const std::string& s) {
  const size_t first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const size_t last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Flat "key = value" lines; '#' starts a comment; duplicate keys rejected.
class KvFile {
 public:
  explicit KvFile(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
      if (const size_t hash = line.find('#'); hash != std::string::npos) line.resize(hash);
      line = trim(line);
      if (line.empty()) continue;
      const size_t eq = line.find('=');
      if (eq == std::string::npos) bad_config("line without '=': '" + line + "'");
      const std::string key = trim(line.substr(0, eq));
      const std::string value = trim(line.substr(eq + 1));
      if (key.empty()) bad_config("empty key in line '" + line + "'");
      for (const auto& [k, v] : entries_)
        if (k == key) bad_config("duplicate key '" + key + "'");
      entries_.emplace_back(key, value);
    }
  }

  std::optional<std::string> take(const std::string& key) {
    for (size_t i = 0; i < entries_.size(); ++i) {
      if (entries_[i].first == key) {
        std::string value = entries_[i].second;
        entries_.erase(entries_.begin() + static_cast<long>(i));
        return value;
      }
    }
    return std::nullopt;
  }

  std::string require(const std::string& key) {
    auto value = take(key);
    if (!value.has_value()) bad_config("missing required key '" + key + "'");
    return *value;
  }

  void reject_leftovers() const {
    if (!entries_.empty()) bad_config("unknown key '" + entries_.front().first + "'");
  }

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

long to_long(const std::string& key, const std::string& text) {
  try {
    size_t used = 0;
    const long value = std::stol(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    bad_config("key '" + key + "' is not an integer: '" + text + "'");
  }
}

std::uint64_t to_uint64(const std::string& key, const std::string& text) {
  try {
    size_t used = 0;
    const std::uint64_t value = std::stoull(text, &used);
    if (used != text.size() || text[0] == '-') throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    bad_config("key '" + key + "' is not a nonnegative integer: '" + text + "'");
  }
}

double to_double(const std::string& key, const std::string& text) {
  try {
    size_t used = 0;
    const double value = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    bad_config("key '" + key + "' is not a number: '" + text + "'");
  }
}

bool to_bool(const std::string& key, const std::string& text) {
  if (text == "true") return true;
  if (text == "false") return false;
  bad_config("key '" + key + "' must be true or false");
}

std::vector<Value> segment_inputs(const PhasedPathParams& params) {
  std::vector<Value> inputs;
  inputs.reserve(params.process_count());
  const int segment = 2 * params.segment_halfwidth + 1;
  for (int i = 0; i <= params.k; ++i)
    inputs.insert(inputs.end(), segment, static_cast<Value>(i + 1));
  return inputs;
}

std::vector<RoundTopology> parse_inline_schedule(int n, const std::string& text) {
  std::vector<RoundTopology> schedule;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t end = text.find(';', pos);
    if (end == std::string::npos) end = text.size();
    schedule.push_back(parse_edges(n, text.substr(pos, end - pos)));
    pos = end + 1;
    if (pos == text.size() + 1) break;
  }
  return schedule;
}

std::vector<RoundTopology> parse_schedule_file(int n, const std::string& path) {
  std::ifstream in(path);
  if (!in) bad_config("cannot open schedule file '" + path + "'");
  std::vector<RoundTopology> schedule;
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    long round = -1;
    schedule.push_back(parse_topology_line(n, line, &round));
    if (round != static_cast<long>(schedule.size()) - 1)
      bad_config("schedule file rounds must be contiguous from 0");
  }
  return schedule;
}

void resolve_inputs(Scenario& s) {
  switch (s.inputs_kind) {
    case InputsKind::Distinct:
      s.inputs.clear();
      for (int i = 1; i <= s.n; ++i) s.inputs.push_back(i);
      break;
    case InputsKind::Random: {
      Rng rng(s.seed ^ kInputSeedSalt);
      s.inputs.clear();
      for (int i = 0; i < s.n; ++i)
        s.inputs.push_back(1 + static_cast<Value>(rng_below(rng, static_cast<std::uint64_t>(s.n))));
      break;
    }
    case InputsKind::BySegment:
      if (!s.phased.has_value()) bad_config("inputs=by_segment requires the phased_path adversary");
      s.inputs = segment_inputs(*s.phased);
      break;
    case InputsKind::Explicit:
      if (static_cast<int>(s.inputs.size()) != s.n)
        bad_config("inputs length " + std::to_string(s.inputs.size()) + " differs from n=" +
                   std::to_string(s.n));
      break;
  }
}

void finalize_scenario(Scenario& s, std::optional<long> gamma_override,
                       std::optional<long> horizon_override, std::optional<int> target_override) {
  if (s.n < 1) bad_config("n must be positive");
  if (s.p < 1) bad_config("p must be positive");

  int default_target = 0;
  if (s.protocol_name == "p_agreement") {
    s.gamma = gamma_override.value_or(budget_p_agreement(s.n, s.p));
    s.protocol = KnownBound{s.gamma};
    s.level = s.p;
    s.k = -1;
    s.quiet_period = -1;
    default_target = s.p;
  } else if (s.protocol_name == "k_agreement") {
    if (!(s.epsilon > 0.0)) bad_config("k_agreement requires epsilon > 0");
    const KBudget budget = budget_k_agreement(s.n, s.p, s.epsilon);
    s.k = budget.k;
    s.gamma = gamma_override.value_or(budget.gamma);
    s.protocol = KnownBound{s.gamma};
    s.level = static_cast<int>(s.k);
    s.quiet_period = -1;
    default_target = static_cast<int>(s.k);
  } else if (s.protocol_name == "unknown_size") {
    if (s.quiet_period < 1) bad_config("unknown_size requires quiet_period >= 1");
    if (gamma_override.has_value()) bad_config("gamma does not apply to unknown_size");
    s.protocol = UnknownSize{s.quiet_period};
    s.gamma = -1;
    s.k = -1;
    s.level = s.p;
    default_target = s.p;
  } else {
    bad_config("unknown protocol '" + s.protocol_name + "'");
  }
  s.budget_override = gamma_override.has_value();
  if (s.gamma < 0 && s.protocol_name != "unknown_size") bad_config("gamma must be nonnegative");

  if (s.adversary == "static_path" || s.adversary == "random_partition") {
    // no parameters
  } else if (s.adversary == "greedy_min_phi") {
    if (s.candidate_budget < 1) bad_config("adversary.candidate_budget must be positive");
  } else if (s.adversary == "scripted") {
    if (s.schedule.empty()) bad_config("scripted adversary requires a schedule");
    for (const RoundTopology& topo : s.schedule)
      if (topo.n != s.n) bad_config("schedule topology has wrong process count");
  } else if (s.adversary == "phased_path") {
    if (!s.phased.has_value()) bad_config("phased_path requires adversary.k and adversary.t");
    if (s.protocol_name != "unknown_size")
      bad_config("phased_path requires the unknown_size protocol");
    s.phased->validate();
    if (s.phased->quiet_period != s.quiet_period)
      bad_config("adversary.T must equal the protocol quiet_period");
    if (s.phased->process_count() != s.n)
      bad_config("phased_path requires n = (k+1)(2t+1) = " +
                 std::to_string(s.phased->process_count()));
    default_target = s.phased->k;
  } else {
    bad_config("unknown adversary '" + s.adversary + "'");
  }

  resolve_inputs(s);

  if (horizon_override.has_value()) {
    s.horizon = *horizon_override;
    if (s.horizon < 0) bad_config("horizon must be nonnegative");
    if (s.protocol_name != "unknown_size" && s.horizon < s.gamma)
      bad_config("horizon " + std::to_string(s.horizon) + " is below the round budget gamma=" +
                 std::to_string(s.gamma));
    if (s.phased.has_value() && s.horizon > s.phased->horizon())
      bad_config("horizon exceeds the phased-path construction horizon " +
                 std::to_string(s.phased->horizon()));
  } else if (s.protocol_name != "unknown_size") {
    s.horizon = s.gamma;
  } else if (s.phased.has_value()) {
    s.horizon = s.phased->horizon();
  } else {
    bad_config("unknown_size scenarios need an explicit horizon");
  }

  s.target_k = target_override.value_or(default_target);
  if (s.target_k < 1) bad_config("target_k must be positive");
}

Scenario build_scenario(KvFile& kv, const std::string& base_dir) {
  Scenario s;
  s.n = static_cast<int>(to_long("n", kv.require("n")));
  s.p = static_cast<int>(to_long("p", kv.require("p")));
  s.protocol_name = kv.require("protocol");
  if (auto eps = kv.take("epsilon")) s.epsilon = to_double("epsilon", *eps);
  if (auto T = kv.take("quiet_period")) s.quiet_period = static_cast<int>(to_long("quiet_period", *T));

  std::optional<long> gamma_override;
  if (auto g = kv.take("gamma")) gamma_override = to_long("gamma", *g);

  s.adversary = kv.require("adversary");
  if (auto budget = kv.take("adversary.candidate_budget")) {
    if (s.adversary != "greedy_min_phi") bad_config("adversary.candidate_budget needs greedy_min_phi");
    s.candidate_budget = static_cast<int>(to_long("adversary.candidate_budget", *budget));
  }
  {
    auto pk = kv.take("adversary.k");
    auto pt = kv.take("adversary.t");
    auto pT = kv.take("adversary.T");
    if (pk.has_value() || pt.has_value() || pT.has_value()) {
      if (s.adversary != "phased_path")
        bad_config("adversary.k/t/T only apply to the phased_path adversary");
      if (!pk.has_value() || !pt.has_value())
        bad_config("phased_path requires both adversary.k and adversary.t");
      PhasedPathParams params;
      params.k = static_cast<int>(to_long("adversary.k", *pk));
      params.segment_halfwidth = static_cast<int>(to_long("adversary.t", *pt));
      params.quiet_period =
          pT.has_value() ? static_cast<int>(to_long("adversary.T", *pT)) : s.quiet_period;
      s.phased = params;
    }
  }
  {
    auto inline_schedule = kv.take("adversary.schedule");
    auto schedule_file = kv.take("adversary.schedule_file");
    if (inline_schedule.has_value() && schedule_file.has_value())
      bad_config("give adversary.schedule or adversary.schedule_file, not both");
    if (inline_schedule.has_value() || schedule_file.has_value()) {
      if (s.adversary != "scripted") bad_config("a schedule needs the scripted adversary");
      s.schedule = inline_schedule.has_value()
                       ? parse_inline_schedule(s.n, *inline_schedule)
                       : parse_schedule_file(
                             s.n, (std::filesystem::path(base_dir) / *schedule_file).string());
    }
  }

  if (auto seed = kv.take("seed")) s.seed = to_uint64("seed", *seed);

  if (auto inputs = kv.take("inputs")) {
    if (*inputs == "distinct") {
      s.inputs_kind = InputsKind::Distinct;
    } else if (*inputs == "random") {
      s.inputs_kind = InputsKind::Random;
    } else if (*inputs == "by_segment") {
      s.inputs_kind = InputsKind::BySegment;
    } else {
      s.inputs_kind = InputsKind::Explicit;
      try {
        s.inputs = parse_value_list(*inputs);
      } catch (const std::exception&) {
        bad_config("inputs must be distinct, random, by_segment, or a comma list of integers");
      }
    }
  } else {
    s.inputs_kind = s.adversary == "phased_path" ? InputsKind::BySegment : InputsKind::Distinct;
  }

  std::optional<long> horizon_override;
  if (auto h = kv.take("horizon")) horizon_override = to_long("horizon", *h);
  std::optional<int> target_override;
  if (auto t = kv.take("target_k")) target_override = static_cast<int>(to_long("target_k", *t));
  if (auto e = kv.take("expect_disagreement"))
    s.expect_disagreement = to_bool("expect_disagreement", *e);

  finalize_scenario(s, gamma_override, horizon_override, target_override);
  return s;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad_config("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::vector<long> parse_int_range(const std::string& key, const std::string& text) {
  std::vector<long> values;
  if (trim(text).empty()) return values;
  if (const size_t dots = text.find(".."); dots != std::string::npos) {
    const long lo = to_long(key, trim(text.substr(0, dots)));
    const long hi = to_long(key, trim(text.substr(dots + 2)));
    if (hi < lo) bad_config("key '" + key + "': range upper bound below lower bound");
    for (long v = lo; v <= hi; ++v) values.push_back(v);
    return values;
  }
  size_t pos = 0;
  while (pos < text.size()) {
    size_t end = text.find(',', pos);
    if (end == std::string::npos) end = text.size();
    values.push_back(to_long(key, trim(text.substr(pos, end - pos))));
    pos = end + 1;
  }
  return values;
}

std::vector<double> parse_double_list(const std::string& key, const std::string& text) {
  std::vector<double> values;
  if (trim(text).empty()) return values;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t end = text.find(',', pos);
    if (end == std::string::npos) end = text.size();
    values.push_back(to_double(key, trim(text.substr(pos, end - pos))));
    pos = end + 1;
  }
  return values;
}

}  // namespace

Scenario load_scenario_text(const std::string& text, const std::string& base_dir) {
  KvFile kv(text);
  Scenario s = build_scenario(kv, base_dir);
  kv.reject_leftovers();
  return s;
}

Scenario load_scenario_file(const std::string& path) {
  return load_scenario_text(read_file(path), std::filesystem::path(path).parent_path().string());
}

void override_scenario(Scenario& scenario, std::optional<std::uint64_t> seed,
                       std::optional<long> horizon) {
  if (seed.has_value()) {
    scenario.seed = *seed;
    if (scenario.inputs_kind == InputsKind::Random) resolve_inputs(scenario);
  }
  if (horizon.has_value()) {
    if (*horizon < 0) bad_config("horizon must be nonnegative");
    if (scenario.protocol_name != "unknown_size" && *horizon < scenario.gamma)
      bad_config("horizon is below the round budget gamma=" + std::to_string(scenario.gamma));
    if (scenario.phased.has_value() && *horizon > scenario.phased->horizon())
      bad_config("horizon exceeds the phased-path construction horizon");
    scenario.horizon = *horizon;
  }
}

std::unique_ptr<AdversaryStrategy> make_strategy(const Scenario& scenario) {
  if (scenario.adversary == "static_path") return std::make_unique<StaticPathStrategy>();
  if (scenario.adversary == "scripted") return std::make_unique<ScriptedStrategy>(scenario.schedule);
  if (scenario.adversary == "random_partition")
    return std::make_unique<RandomPartitionStrategy>();
  if (scenario.adversary == "greedy_min_phi")
    return std::make_unique<GreedyMinPhiStrategy>(scenario.level, scenario.candidate_budget);
  if (scenario.adversary == "phased_path")
    return std::make_unique<PhasedPathStrategy>(*scenario.phased);
  bad_config("unknown adversary '" + scenario.adversary + "'");
}

TraceHeader make_header(const Scenario& scenario) {
  TraceHeader h;
  h.n = scenario.n;
  h.p = scenario.p;
  h.level = scenario.level;
  h.protocol = scenario.protocol_name;
  h.gamma = scenario.gamma;
  h.epsilon = scenario.epsilon;
  h.k = scenario.k;
  h.quiet_period = scenario.quiet_period;
  h.adversary = scenario.adversary;
  if (scenario.adversary == "greedy_min_phi")
    h.adversary_params.emplace_back("candidate_budget", std::to_string(scenario.candidate_budget));
  if (scenario.adversary == "phased_path") {
    h.adversary_params.emplace_back("k", std::to_string(scenario.phased->k));
    h.adversary_params.emplace_back("t", std::to_string(scenario.phased->segment_halfwidth));
    h.adversary_params.emplace_back("T", std::to_string(scenario.phased->quiet_period));
  }
  if (scenario.adversary == "scripted")
    h.adversary_params.emplace_back("schedule_len", std::to_string(scenario.schedule.size()));
  h.seed = scenario.seed;
  h.horizon = scenario.horizon;
  h.target_k = scenario.target_k;
  h.budget_override = scenario.budget_override;
  h.expect_disagreement = scenario.expect_disagreement;
  h.inputs = scenario.inputs;
  return h;
}

SweepSpec load_sweep_text(const std::string& text, const std::string& base_dir) {
  KvFile kv(text);
  SweepSpec spec;
  std::vector<long> ns, ps;
  if (auto v = kv.take("sweep.n")) {
    ns = parse_int_range("sweep.n", *v);
    if (ns.empty()) spec.ranges.declared_empty = true;
  }
  if (auto v = kv.take("sweep.p")) {
    ps = parse_int_range("sweep.p", *v);
    if (ps.empty()) spec.ranges.declared_empty = true;
  }
  if (auto v = kv.take("sweep.epsilon")) {
    spec.ranges.epsilon = parse_double_list("sweep.epsilon", *v);
    if (spec.ranges.epsilon.empty()) spec.ranges.declared_empty = true;
  }
  if (auto v = kv.take("sweep.trials"))
    spec.ranges.trials = static_cast<int>(to_long("sweep.trials", *v));
  if (spec.ranges.trials < 1) bad_config("sweep.trials must be positive");
  for (long v : ns) spec.ranges.n.push_back(static_cast<int>(v));
  for (long v : ps) spec.ranges.p.push_back(static_cast<int>(v));

  spec.base = build_scenario(kv, base_dir);
  kv.reject_leftovers();

  if (spec.base.adversary == "scripted" || spec.base.adversary == "phased_path")
    bad_config("sweeps support the static_path, random_partition and greedy_min_phi adversaries");
  if (!spec.ranges.epsilon.empty() && spec.base.protocol_name != "k_agreement")
    bad_config("sweep.epsilon requires the k_agreement protocol");
  if (!spec.ranges.n.empty() && spec.base.inputs_kind == InputsKind::Explicit)
    bad_config("explicit inputs cannot be swept over n");
  return spec;
}

SweepSpec load_sweep_file(const std::string& path) {
  return load_sweep_text(read_file(path), std::filesystem::path(path).parent_path().string());
}

Scenario sweep_point_scenario(const Scenario& base, int n, int p, double epsilon,
                              std::uint64_t seed) {
  Scenario s = base;
  s.n = n;
  s.p = p;
  s.epsilon = epsilon;
  s.seed = seed;
  if (s.inputs_kind != InputsKind::Explicit) s.inputs.clear();
  finalize_scenario(s, std::nullopt, std::nullopt, std::nullopt);
  return s;
}

}  // namespace minflood
