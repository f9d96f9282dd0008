#include "minflood/trace.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "minflood/analysis.hpp"

namespace minflood {

namespace {

std::string bool_text(bool b) { return b ? "true" : "false"; }

std::string double_text(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

[[noreturn]] void bad_trace(const std::string& what) {
  throw std::invalid_argument("trace: " + what);
}

// space-separated key=value tokens; values never contain spaces
std::map<std::string, std::string> parse_fields(const std::string& line, size_t skip_tokens) {
  std::istringstream is(line);
  std::string token;
  for (size_t i = 0; i < skip_tokens; ++i) is >> token;
  std::map<std::string, std::string> fields;
  while (is >> token) {
    const size_t eq = token.find('=');
    if (eq == std::string::npos) bad_trace("malformed token '" + token + "' in '" + line + "'");
    if (!fields.emplace(token.substr(0, eq), token.substr(eq + 1)).second)
      bad_trace("duplicate field '" + token.substr(0, eq) + "' in '" + line + "'");
  }
  return fields;
}

class FieldReader {
 public:
  FieldReader(std::map<std::string, std::string> fields, std::string what)
      : fields_(std::move(fields)), what_(std::move(what)) {}

  std::string take(const std::string& key) {
    auto it = fields_.find(key);
    if (it == fields_.end()) bad_trace(what_ + ": missing field '" + key + "'");
    std::string value = it->second;
    fields_.erase(it);
    return value;
  }

  std::optional<std::string> take_optional(const std::string& key) {
    auto it = fields_.find(key);
    if (it == fields_.end()) return std::nullopt;
    std::string value = it->second;
    fields_.erase(it);
    return value;
  }

  bool has(const std::string& key) const { return fields_.count(key) > 0; }

  long take_long(const std::string& key) {
    const std::string text = take(key);
    try {
      return std::stol(text);
    } catch (const std::exception&) {
      bad_trace(what_ + ": field '" + key + "' is not an integer");
    }
  }

  bool take_bool(const std::string& key) {
    const std::string text = take(key);
    if (text == "true") return true;
    if (text == "false") return false;
    bad_trace(what_ + ": field '" + key + "' is not a boolean");
  }

  // leftover fields become adversary params, in file order handled by caller
  std::map<std::string, std::string>& rest() { return fields_; }

 private:
  std::map<std::string, std::string> fields_;
  std::string what_;
};

std::string sanitize_reason(std::string reason) {
  for (char& c : reason)
    if (c == ' ' || c == '\n' || c == '\t') c = '_';
  return reason;
}

}  // namespace

std::string format_value_list(const std::vector<Value>& values) {
  std::ostringstream os;
  for (size_t i = 0; i < values.size(); ++i) {
    if (i > 0) os << ',';
    os << values[i];
  }
  return os.str();
}

std::vector<Value> parse_value_list(const std::string& text) {
  std::vector<Value> values;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t end = text.find(',', pos);
    if (end == std::string::npos) end = text.size();
    try {
      values.push_back(std::stoll(text.substr(pos, end - pos)));
    } catch (const std::exception&) {
      bad_trace("malformed value list '" + text + "'");
    }
    pos = end + 1;
  }
  return values;
}

std::string format_trace(const ExecutionTrace& trace) {
  const TraceHeader& h = trace.header;
  std::ostringstream os;

  os << "header n=" << h.n << " p=" << h.p << " level=" << h.level << " protocol=" << h.protocol;
  if (h.protocol == "k_agreement") os << " epsilon=" << double_text(h.epsilon) << " k=" << h.k;
  if (h.gamma >= 0) os << " gamma=" << h.gamma;
  if (h.quiet_period >= 0) os << " T=" << h.quiet_period;
  os << " adversary=" << h.adversary;
  for (const auto& [key, value] : h.adversary_params) os << " adversary." << key << '=' << value;
  os << " seed=" << h.seed << " horizon=" << h.horizon << " target_k=" << h.target_k
     << " budget_override=" << bool_text(h.budget_override)
     << " expect_disagreement=" << bool_text(h.expect_disagreement)
     << " inputs=" << format_value_list(h.inputs) << '\n';

  for (const RoundRecord& rec : trace.rounds) {
    os << "t=" << rec.t << " phi=" << rec.phi << " dphi=" << rec.dphi
       << " S=" << format_value_list(rec.distinct) << " comps=" << rec.components
       << " edges=" << format_edges(rec.topology) << '\n';
  }
  os << "t=" << trace.final_snapshot.t << " phi=" << trace.final_snapshot.phi
     << " S=" << format_value_list(trace.final_snapshot.distinct) << '\n';

  if (trace.abort_round.has_value())
    os << "abort round=" << *trace.abort_round << " reason=" << sanitize_reason(trace.abort_reason)
       << '\n';

  if (trace.verdict.has_value()) {
    const Verdict& v = *trace.verdict;
    os << "verdict agreement_k=" << v.agreement_k << " W=" << format_value_list(v.decision_set)
       << " validity=" << bool_text(v.validity_ok) << " termination=" << bool_text(v.termination_ok)
       << " rounds=" << v.rounds_used << '\n';
  }
  return os.str();
}

ParsedTrace parse_trace(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(is, line))
    if (!line.empty()) lines.push_back(line);
  if (lines.empty() || lines.front().rfind("header ", 0) != 0)
    bad_trace("first line must be a header");

  ParsedTrace out;
  {
    FieldReader fr(parse_fields(lines.front(), 1), "header");
    out.header.n = static_cast<int>(fr.take_long("n"));
    out.header.p = static_cast<int>(fr.take_long("p"));
    out.header.level = static_cast<int>(fr.take_long("level"));
    out.header.protocol = fr.take("protocol");
    if (auto eps = fr.take_optional("epsilon")) out.header.epsilon = std::stod(*eps);
    if (fr.has("k")) out.header.k = fr.take_long("k");
    if (fr.has("gamma")) out.header.gamma = fr.take_long("gamma");
    if (fr.has("T")) out.header.quiet_period = static_cast<int>(fr.take_long("T"));
    out.header.adversary = fr.take("adversary");
    out.header.seed = static_cast<std::uint64_t>(std::stoull(fr.take("seed")));
    out.header.horizon = fr.take_long("horizon");
    out.header.target_k = static_cast<int>(fr.take_long("target_k"));
    out.header.budget_override = fr.take_bool("budget_override");
    out.header.expect_disagreement = fr.take_bool("expect_disagreement");
    out.header.inputs = parse_value_list(fr.take("inputs"));
    for (const auto& [key, value] : fr.rest()) {
      if (key.rfind("adversary.", 0) != 0) bad_trace("unknown header field '" + key + "'");
      out.header.adversary_params.emplace_back(key.substr(10), value);
    }
  }

  bool saw_snapshot = false;
  bool saw_verdict = false;
  for (size_t i = 1; i < lines.size(); ++i) {
    const std::string& cur = lines[i];
    if (cur.rfind("t=", 0) == 0) {
      if (saw_snapshot) bad_trace("record after final snapshot");
      FieldReader fr(parse_fields(cur, 0), "record");
      const long t = fr.take_long("t");
      const long phi = fr.take_long("phi");
      const std::vector<Value> distinct = parse_value_list(fr.take("S"));
      if (fr.has("edges")) {
        ParsedRecord rec;
        rec.t = t;
        rec.phi = phi;
        rec.distinct = distinct;
        rec.dphi = fr.take_long("dphi");
        rec.components = static_cast<int>(fr.take_long("comps"));
        rec.topology = parse_edges(out.header.n, fr.take("edges"));
        out.rounds.push_back(std::move(rec));
      } else {
        out.final_snapshot.t = t;
        out.final_snapshot.phi = phi;
        out.final_snapshot.distinct = distinct;
        saw_snapshot = true;
      }
      if (!fr.rest().empty()) bad_trace("unknown record field");
    } else if (cur.rfind("abort ", 0) == 0) {
      FieldReader fr(parse_fields(cur, 1), "abort");
      out.abort_round = fr.take_long("round");
      out.abort_reason = fr.take("reason");
    } else if (cur.rfind("verdict ", 0) == 0) {
      FieldReader fr(parse_fields(cur, 1), "verdict");
      out.verdict.agreement_k = static_cast<int>(fr.take_long("agreement_k"));
      out.verdict.decision_set = parse_value_list(fr.take("W"));
      out.verdict.validity_ok = fr.take_bool("validity");
      out.verdict.termination_ok = fr.take_bool("termination");
      out.verdict.rounds_used = fr.take_long("rounds");
      saw_verdict = true;
      if (i + 1 != lines.size()) bad_trace("verdict must be the last line");
    } else {
      bad_trace("unrecognized line '" + cur + "'");
    }
  }
  if (!saw_snapshot) bad_trace("missing final snapshot line");
  if (!saw_verdict) bad_trace("missing verdict line");
  return out;
}

std::vector<std::string> check_trace(const ParsedTrace& trace) {
  std::vector<std::string> violations;
  const TraceHeader& h = trace.header;
  auto complain = [&](const std::string& what) { violations.push_back(what); };

  if (static_cast<int>(h.inputs.size()) != h.n) complain("header inputs length differs from n");

  const long rounds = static_cast<long>(trace.rounds.size());
  for (long t = 0; t < rounds; ++t)
    if (trace.rounds[t].t != t) {
      complain("round records are not numbered 0..R-1");
      break;
    }
  if (trace.final_snapshot.t != rounds) complain("final snapshot is not at t = rounds executed");

  const long phi0 = h.inputs.empty() ? 0 : potential(h.inputs, h.level);
  const long first_phi = rounds > 0 ? trace.rounds.front().phi : trace.final_snapshot.phi;
  if (!h.inputs.empty() && first_phi != phi0)
    complain("round-0 phi does not match the potential of the raw inputs");

  const long cap = static_cast<long>(h.level) * (h.n - h.level) +
                   static_cast<long>(h.level) * (h.level - 1) / 2;
  const bool known_bound = h.protocol != "unknown_size";

  for (long t = 0; t < rounds; ++t) {
    const ParsedRecord& rec = trace.rounds[t];
    const std::string at = "round " + std::to_string(t) + ": ";

    PartitionCheck part{false, 0};
    try {
      part = validate_p_partitioned(rec.topology, h.p);
    } catch (const std::exception& e) {
      complain(at + e.what());
      continue;
    }
    if (part.components != rec.components) complain(at + "comps does not match the edge list");
    if (!part.ok) complain(at + "topology exceeds the partition bound p");

    const long next_phi = t + 1 < rounds ? trace.rounds[t + 1].phi : trace.final_snapshot.phi;
    if (rec.phi + rec.dphi != next_phi) complain(at + "phi chain broken (phi + dphi mismatch)");

    const std::vector<Value>& next_S =
        t + 1 < rounds ? trace.rounds[t + 1].distinct : trace.final_snapshot.distinct;
    if (!std::is_sorted(rec.distinct.begin(), rec.distinct.end()))
      complain(at + "S is not sorted ascending");
    if (!std::includes(rec.distinct.begin(), rec.distinct.end(), next_S.begin(), next_S.end()))
      complain(at + "S(t+1) is not a subset of S(t)");

    const int distinct_now = static_cast<int>(rec.distinct.size());
    if (distinct_now > h.level && rec.phi > cap)
      complain(at + "phi exceeds its cap while |S(t)| > level");
    if (known_bound && distinct_now > h.level && rec.dphi < std::max(1, h.level + 1 - h.p))
      complain(at + "phi increase below the guaranteed minimum");
  }

  const Verdict& v = trace.verdict;
  if (v.agreement_k != static_cast<int>(v.decision_set.size()))
    complain("verdict: agreement_k differs from |W|");
  if (v.rounds_used != rounds) complain("verdict: rounds differs from the executed round count");
  std::vector<Value> sorted_inputs = h.inputs;
  std::sort(sorted_inputs.begin(), sorted_inputs.end());
  const bool w_valid = std::includes(sorted_inputs.begin(), sorted_inputs.end(),
                                     v.decision_set.begin(), v.decision_set.end());
  if (v.validity_ok != w_valid) complain("verdict: validity flag does not match W vs inputs");

  return violations;
}

}  // namespace minflood
