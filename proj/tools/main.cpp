#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "minflood/analysis.hpp"
#include "minflood/oracle.hpp"
#include "minflood/runner.hpp"
#include "minflood/scenario.hpp"
#include "minflood/sweep.hpp"
#include "minflood/trace.hpp"

namespace {

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

int cmd_run(const std::string& config, std::optional<std::uint64_t> seed,
            std::optional<long> horizon, const std::string& trace_out, bool quiet) {
  minflood::Scenario scenario = minflood::load_scenario_file(config);
  minflood::override_scenario(scenario, seed, horizon);

  const minflood::ExecutionTrace trace = minflood::run(scenario);
  const std::string text = minflood::format_trace(trace);
  if (!trace_out.empty()) write_file(trace_out, text);
  if (!quiet) std::cout << text;

  if (trace.abort_round.has_value())
    std::cerr << "run aborted at round " << *trace.abort_round << ": " << trace.abort_reason
              << "\n";
  return minflood::run_succeeded(trace) ? 0 : 1;
}

int cmd_sweep(const std::string& config, std::optional<std::uint64_t> seed,
              const std::string& trace_out, bool quiet, bool serial) {
  minflood::SweepSpec spec = minflood::load_sweep_file(config);
  if (seed.has_value()) spec.base.seed = *seed;

  const auto points = minflood::run_sweep(
      spec, serial ? minflood::SweepMode::Serial : minflood::SweepMode::Parallel);
  const std::string table = minflood::format_sweep_table(spec, points);
  if (!trace_out.empty()) write_file(trace_out, table);
  if (!quiet) std::cout << table;

  for (const minflood::SweepPoint& point : points)
    if (!point.ok) return 1;
  return 0;
}

int cmd_oracle(int n, int p, const std::string& inputs_text, bool serial, bool quiet) {
  std::vector<minflood::Value> inputs;
  if (inputs_text.empty()) {
    for (int i = 1; i <= n; ++i) inputs.push_back(i);
  } else {
    inputs = minflood::parse_value_list(inputs_text);
  }

  const long worst = serial ? minflood::brute_force_worst_rounds_serial(n, p, inputs)
                            : minflood::brute_force_worst_rounds(n, p, inputs);
  const long budget = minflood::budget_p_agreement(n, p);
  const bool ok = worst <= budget;
  if (!quiet)
    std::cout << "oracle n=" << n << " p=" << p
              << " inputs=" << minflood::format_value_list(inputs) << " worst_rounds=" << worst
              << " budget=" << budget << " ok=" << (ok ? "true" : "false") << "\n";
  return ok ? 0 : 1;
}

int cmd_check(const std::string& path, bool quiet) {
  const minflood::ParsedTrace trace = minflood::parse_trace(read_file(path));
  const std::vector<std::string> violations = minflood::check_trace(trace);
  for (const std::string& v : violations) std::cerr << "violation: " << v << "\n";
  if (violations.empty() && !quiet)
    std::cout << "check ok rounds=" << trace.rounds.size()
              << " records=" << trace.rounds.size() + 1 << "\n";
  return violations.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"min-flooding agreement simulator for partitioned dynamic networks"};
  app.require_subcommand(1);

  std::string config, trace_out, inputs_text, trace_path;
  std::uint64_t seed_value = 0;
  long horizon_value = 0;
  bool quiet = false, serial = false;
  int oracle_n = 0, oracle_p = 0;

  CLI::App* run_cmd = app.add_subcommand("run", "execute one scenario and emit its trace");
  run_cmd->add_option("config", config, "scenario file")->required();
  CLI::Option* run_seed = run_cmd->add_option("--seed", seed_value, "override the scenario seed");
  CLI::Option* run_horizon =
      run_cmd->add_option("--horizon", horizon_value, "override the round horizon");
  run_cmd->add_option("--trace-out", trace_out, "also write the trace to this file");
  run_cmd->add_flag("--quiet", quiet, "suppress stdout");

  CLI::App* sweep_cmd = app.add_subcommand("sweep", "run a parameter sweep and print the table");
  sweep_cmd->add_option("config", config, "sweep file")->required();
  CLI::Option* sweep_seed = sweep_cmd->add_option("--seed", seed_value, "override the base seed");
  sweep_cmd->add_option("--trace-out", trace_out, "also write the table to this file");
  sweep_cmd->add_flag("--quiet", quiet, "suppress stdout");
  sweep_cmd->add_flag("--serial", serial, "disable the parallel sweep loop");

  CLI::App* oracle_cmd =
      app.add_subcommand("oracle", "brute-force worst-case rounds vs the p-agreement budget");
  oracle_cmd->add_option("n", oracle_n, "process count (at most 4)")->required();
  oracle_cmd->add_option("p", oracle_p, "partition bound")->required();
  oracle_cmd->add_option("--inputs", inputs_text, "comma list, default distinct 1..n");
  oracle_cmd->add_flag("--serial", serial, "use the serial reference search");
  oracle_cmd->add_flag("--quiet", quiet, "suppress stdout");

  CLI::App* check_cmd = app.add_subcommand("check", "re-verify a saved trace file");
  check_cmd->add_option("trace", trace_path, "trace file")->required();
  check_cmd->add_flag("--quiet", quiet, "suppress stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run_cmd->parsed())
      return cmd_run(config,
                     run_seed->count() ? std::optional<std::uint64_t>(seed_value) : std::nullopt,
                     run_horizon->count() ? std::optional<long>(horizon_value) : std::nullopt,
                     trace_out, quiet);
    if (sweep_cmd->parsed())
      return cmd_sweep(config,
                       sweep_seed->count() ? std::optional<std::uint64_t>(seed_value) : std::nullopt,
                       trace_out, quiet, serial);
    if (oracle_cmd->parsed()) return cmd_oracle(oracle_n, oracle_p, inputs_text, serial, quiet);
    if (check_cmd->parsed()) return cmd_check(trace_path, quiet);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
