// Command-line entry points: run one scenario, sweep seeded families, run
// the verification suite, or replay the SSYNC adversary.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "suig/scenario.hpp"
#include "suig/sweep.hpp"
#include "suig/trace_io.hpp"
#include "suig/verification.hpp"

namespace {

using namespace suig;
using nlohmann::json;
namespace fs = std::filesystem;

enum ExitCode : int {
  kGathered = 0,
  kError = 1,
  kRoundCap = 2,
  kPrecision = 3,
  kCheckFailed = 4,
};

std::string default_output(const std::string& name) {
  const char* dir = std::getenv("SUIG_OUTPUT_DIR");
  if (dir == nullptr || *dir == '\0') return {};
  return (fs::path(dir) / name).string();
}

std::ofstream open_output(const std::string& path) {
  const fs::path p(path);
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct RunArgs {
  std::string scenario;
  std::string trace;
  std::string summary;
  std::uint64_t max_rounds = 0;
  std::optional<std::uint64_t> seed;
  bool serial = false;
};

int cmd_run(const RunArgs& args) {
  Scenario s = parse_scenario(read_file(args.scenario));
  if (args.max_rounds > 0) s.max_rounds = args.max_rounds;
  if (args.seed) {
    s.scheduler.seed = *args.seed;
    s.movement.seed = *args.seed;
  }
  if (auto v = validate(s); !v.empty()) throw ScenarioError(v);
  const std::string digest = scenario_digest(s);
  std::string trace_path = !args.trace.empty() ? args.trace : s.outputs.trace;
  std::string summary_path = !args.summary.empty() ? args.summary : s.outputs.summary;
  if (trace_path.empty()) trace_path = default_output("trace-" + digest + ".jsonl");
  if (summary_path.empty()) summary_path = default_output("summary-" + digest + ".csv");

  Trace trace;
  try {
    trace = run(s, args.serial ? ExecutionMode::Serial : ExecutionMode::Parallel);
  } catch (const PrecisionLimitError& e) {
    std::cerr << "precision limit: " << e.what() << '\n';
    return kPrecision;
  }
  if (!trace_path.empty()) {
    auto out = open_output(trace_path);
    write_trace_jsonl(out, trace, {&s, !s.scheduler.synchronous()});
  }
  if (!summary_path.empty()) {
    auto out = open_output(summary_path);
    write_summary_csv(out, trace);
  }
  std::cout << to_string(trace.verdict.kind) << " round=" << trace.verdict.round;
  if (trace.verdict.point) std::cout << " point=" << *trace.verdict.point;
  std::cout << " digest=" << digest << '\n';
  return trace.verdict.kind == VerdictKind::Gathered ? kGathered : kRoundCap;
}

struct SweepArgs {
  std::string family = "suig";
  bool crash = false;
  std::uint64_t seeds = 100;
  std::uint64_t first_seed = 0;
  std::string out;
  bool serial = false;
};

int cmd_sweep(const SweepArgs& args) {
  SweepOptions opts;
  opts.family = parse_family(args.family == "suig" && args.crash ? "suig_crash" : args.family);
  opts.first_seed = args.first_seed;
  opts.count = args.seeds;
  opts.mode = args.serial ? ExecutionMode::Serial : ExecutionMode::Parallel;
  const auto rows = run_sweep(opts);
  std::string path = args.out.empty() ? default_output("sweep-" + std::string(to_string(opts.family)) + ".csv")
                                      : args.out;
  if (path.empty()) {
    write_sweep_csv(std::cout, rows);
  } else {
    auto out = open_output(path);
    write_sweep_csv(out, rows);
  }
  std::size_t ok = 0, gathered = 0;
  std::uint64_t max_rounds = 0;
  long min_margin = std::numeric_limits<long>::max();
  for (const auto& r : rows) {
    ok += r.ok(opts.family) ? 1 : 0;
    gathered += r.gathered() ? 1 : 0;
    max_rounds = std::max(max_rounds, r.rounds);
    if (r.bound_verdict != BoundVerdict::Inapplicable) {
      min_margin = std::min(min_margin, static_cast<long>(r.bound) - static_cast<long>(r.rounds));
    }
  }
  std::cerr << to_string(opts.family) << ": " << rows.size() << " runs, " << gathered << " gathered, " << ok
            << " passing all checks, max rounds " << max_rounds;
  if (min_margin != std::numeric_limits<long>::max()) std::cerr << ", min bound margin " << min_margin;
  std::cerr << '\n';
  return ok == rows.size() ? kGathered : kCheckFailed;
}

struct VerifyArgs {
  std::string report;
  std::uint64_t sweep_seeds = 1000;
  std::uint64_t horizon = 10000;
};

json case_json(const std::string& group, const CaseReport& c) {
  return {{"group", group},     {"name", c.id},         {"pass", c.pass},
          {"expected", c.expected}, {"observed", c.observed}, {"rounds", c.rounds}};
}

json monitor_json(const std::string& group, const std::string& name, bool pass, const std::string& detail) {
  return {{"group", group}, {"name", name}, {"pass", pass}, {"detail", detail}};
}

int cmd_verify(const VerifyArgs& args) {
  json entries = json::array();
  for (const auto& c : verify_suir_common()) entries.push_back(case_json("suir-common", c));
  for (const auto& c : verify_suir_opposite()) entries.push_back(case_json("suir-opposite", c));
  for (const auto& c : verify_suir_crash()) entries.push_back(case_json("suir-crash", c));

  const GeometryReport geo = verify_crash_geometry();
  for (const auto& c : geo.cases) entries.push_back(monitor_json("crash-geometry", c.id, c.pass, c.detail));

  const MonitorResult one_round = verify_one_round_contraction(10000, 7);
  entries.push_back(monitor_json("contraction", "one-round distance function", one_round.pass, one_round.detail));

  for (SweepFamily family : {SweepFamily::SuirContraction, SweepFamily::SuigNoCrash, SweepFamily::SuigCrash}) {
    SweepOptions opts;
    opts.family = family;
    opts.count = family == SweepFamily::SuigCrash ? args.sweep_seeds / 2 : args.sweep_seeds;
    const auto rows = run_sweep(opts);
    std::size_t bad = 0;
    std::string first;
    for (const auto& r : rows) {
      if (!r.ok(family)) {
        if (bad++ == 0) first = "seed " + std::to_string(r.seed) + " " + r.verdict + " " + r.error;
      }
    }
    entries.push_back(monitor_json("sweep", std::string(to_string(family)) + " x" + std::to_string(rows.size()),
                                   bad == 0, bad == 0 ? "" : std::to_string(bad) + " failing; first: " + first));
  }

  const Frame half_turn{Rational(-1), 0, false};
  for (const auto& [kind, frame] : {std::pair{AlgorithmKind::LiftedSuir, Frame::identity()},
                                    std::pair{AlgorithmKind::LiftedSuir, half_turn},
                                    std::pair{AlgorithmKind::Midpoint, Frame::identity()}}) {
    const auto rep = demo_impossibility(kind, args.horizon, frame, Frame::identity());
    entries.push_back(monitor_json("impossibility", rep.name, !rep.gathered && rep.rules_consistent, rep.detail));
  }
  const auto bivalent = demo_impossibility(AlgorithmKind::LiftedSuir, args.horizon, Frame::identity(),
                                           Frame::identity(), 3);
  entries.push_back(monitor_json("impossibility", bivalent.name,
                                 !bivalent.gathered && bivalent.rules_consistent && bivalent.groups_intact,
                                 bivalent.detail));

  const LiftReport lift = verify_lift_equivalence(200, 1);
  entries.push_back(monitor_json("lift", "line vs planar x" + std::to_string(lift.instances), lift.pass, lift.detail));

  const AxisReport axis = verify_axis_rendezvous();
  entries.push_back(monitor_json("axis", "asymmetric starts", axis.asymmetric_ok, axis.detail));
  entries.push_back(monitor_json("axis", "symmetric decrease >= sqrt(2) delta", axis.claimed_bound, axis.detail));
  entries.push_back(monitor_json("axis", "symmetric decrease >= delta", axis.travel_bound, axis.detail));

  std::size_t failed = 0;
  std::cout << std::left << std::setw(16) << "group" << std::setw(44) << "name" << "result\n";
  for (const auto& e : entries) {
    const bool pass = e["pass"].get<bool>();
    failed += pass ? 0 : 1;
    std::cout << std::setw(16) << e["group"].get<std::string>() << std::setw(44) << e["name"].get<std::string>()
              << (pass ? "pass" : "FAIL");
    if (!pass && e.contains("observed")) std::cout << "  observed " << e["observed"].get<std::string>();
    if (!pass && e.contains("detail")) std::cout << "  " << e["detail"].get<std::string>();
    std::cout << '\n';
  }
  std::cout << entries.size() - failed << "/" << entries.size() << " entries pass\n";

  std::string path = args.report.empty() ? default_output("verify-report.json") : args.report;
  if (!path.empty()) {
    auto out = open_output(path);
    out << json{{"entries", entries}, {"passed", entries.size() - failed}, {"total", entries.size()}}.dump(2)
        << '\n';
  }
  return failed == 0 ? kGathered : kCheckFailed;
}

struct DemoArgs {
  std::string algo = "lifted_suir";
  std::uint64_t horizon = 10000;
  std::size_t copies = 1;
  bool half_turn = false;
  std::string report;
};

int cmd_demo(const DemoArgs& args) {
  const Frame r_frame = args.half_turn ? Frame{Rational(-1), 0, false} : Frame::identity();
  const auto rep = demo_impossibility(parse_algorithm(args.algo), args.horizon, r_frame, Frame::identity(),
                                      args.copies);
  json rules = json::object();
  for (const auto& [rule, count] : rep.rule_counts) rules[std::string(to_string(rule))] = count;
  json gaps = json::object();
  for (const auto& [id, gap] : rep.activation.max_gap) gaps[std::to_string(id)] = gap;
  json histogram = json::object();
  for (const auto& [gap, count] : rep.activation.gap_histogram) histogram[std::to_string(gap)] = count;
  const json out = {{"algorithm", rep.name},     {"rounds", rep.rounds},          {"gathered", rep.gathered},
                    {"rules", rules},            {"rules_consistent", rep.rules_consistent},
                    {"groups_intact", rep.groups_intact}, {"max_gap", gaps},       {"gap_histogram", histogram}};
  std::cout << out.dump(2) << '\n';
  std::string path = args.report.empty() ? default_output("adversary-demo.json") : args.report;
  if (!path.empty()) {
    auto f = open_output(path);
    f << out.dump(2) << '\n';
  }
  return !rep.gathered && rep.rules_consistent && rep.groups_intact ? kGathered : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact simulator for crash-tolerant gathering of oblivious robots"};
  app.require_subcommand(1);

  RunArgs run_args;
  auto* run_cmd = app.add_subcommand("run", "Run one scenario; exit 0 when gathered, 2 at the round cap");
  run_cmd->add_option("scenario", run_args.scenario, "Scenario JSON file")->required()->check(CLI::ExistingFile);
  run_cmd->add_option("--trace", run_args.trace, "JSONL trace output");
  run_cmd->add_option("--summary", run_args.summary, "CSV summary output");
  run_cmd->add_option("--max-rounds", run_args.max_rounds, "Override the round cap")->check(CLI::PositiveNumber);
  run_cmd->add_option("--seed", run_args.seed, "Override scheduler and movement seeds");
  run_cmd->add_flag("--serial", run_args.serial, "Use the serial reference kernels");

  SweepArgs sweep_args;
  auto* sweep_cmd = app.add_subcommand("sweep", "Run a seeded family of scenarios and write a CSV");
  sweep_cmd->add_option("--algo,--family", sweep_args.family, "suig, suig_crash or suir");
  sweep_cmd->add_flag("--crash", sweep_args.crash, "With --algo suig: one crashed location per run");
  sweep_cmd->add_option("--seeds", sweep_args.seeds, "Number of seeds");
  sweep_cmd->add_option("--seed", sweep_args.first_seed, "First seed");
  sweep_cmd->add_option("--out", sweep_args.out, "CSV output (default: stdout)");
  sweep_cmd->add_flag("--serial", sweep_args.serial, "Run the seeds one after another");

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Run the verification suite");
  verify_cmd->add_option("--report", verify_args.report, "JSON report output");
  verify_cmd->add_option("--sweep-seeds", verify_args.sweep_seeds, "Seeds per sweep family");
  verify_cmd->add_option("--horizon", verify_args.horizon, "Rounds for the adversary demos");

  DemoArgs demo_args;
  auto* demo_cmd = app.add_subcommand("adversary-demo", "Run the SSYNC adversary against a two-point algorithm");
  demo_cmd->add_option("--algo", demo_args.algo, "lifted_suir, suir or midpoint");
  demo_cmd->add_option("--horizon", demo_args.horizon, "Rounds to run");
  demo_cmd->add_option("--copies", demo_args.copies, "Robots per point (bivalent lift when > 1)")
      ->check(CLI::PositiveNumber);
  demo_cmd->add_flag("--half-turn", demo_args.half_turn, "Rotate the designated robot's frame by 180 degrees");
  demo_cmd->add_option("--report", demo_args.report, "JSON report output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Help and version requests exit 0; usage errors use the common error code.
    app.exit(e);
    return e.get_exit_code() == 0 ? kGathered : kError;
  }

  try {
    if (*run_cmd) return cmd_run(run_args);
    if (*sweep_cmd) return cmd_sweep(sweep_args);
    if (*verify_cmd) return cmd_verify(verify_args);
    if (*demo_cmd) return cmd_demo(demo_args);
  } catch (const ScenarioError& e) {
    for (const auto& v : e.violations) std::cerr << "error: " << v << '\n';
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kError;
  }
  return kError;
}
