#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lexbap/io.hpp"
#include "svg_writer.hpp"

namespace fs = std::filesystem;

namespace {

using namespace lexbap;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;       // unreadable or invalid input
constexpr int kExitAssumption = 2;  // robustness or margin assumption violated
constexpr int kExitViolation = 3;   // collision constraint violated

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void spit(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

void print_orders(const ResultDocument& document) {
  std::cout << "order  agent  task  weight      margin      ties\n";
  int k = 0;
  for (const OrderRecord& order : document.result.orders) {
    std::ostringstream margin;
    if (order.margin.is_infinite()) {
      margin << "inf";
    } else {
      margin << round_to_9_digits(order.margin.value());
    }
    std::cout << "  " << ++k << "      " << order.edge.agent << "      "
              << order.edge.task << "    " << round_to_9_digits(order.weight)
              << "\t" << margin.str() << "\t" << order.tie_count << "\n";
  }
  std::cout << "robust: " << (document.robust ? "yes" : "no") << "\n";
  if (!document.result.unassigned_agents.empty()) {
    std::cout << "unassigned agents:";
    for (int agent : document.result.unassigned_agents) std::cout << ' ' << agent;
    std::cout << "\n";
  }
}

ResultDocument assign_input(const ScenarioInput& input) {
  ResultDocument document;
  document.input = input;
  document.result = sequential_assign(input.build_weight_matrix());
  document.robust = is_robust_lexicographic(document.result);
  return document;
}

int run_assign(const fs::path& scenario_path, const fs::path& output,
               bool require_robust) {
  const ResultDocument document = assign_input(parse_scenario(slurp(scenario_path)));
  spit(output, write_result(document));
  print_orders(document);
  std::cout << "wrote " << output.string() << "\n";
  if (require_robust && !document.robust) {
    std::cerr << "assignment is not robust (some margin is zero)\n";
    return kExitAssumption;
  }
  return kExitOk;
}

int run_batch_assign(const fs::path& directory, bool require_robust) {
  if (!fs::is_directory(directory)) {
    std::cerr << directory.string() << " is not a directory\n";
    return kExitInput;
  }
  std::vector<fs::path> scenarios;
  for (const auto& entry : fs::directory_iterator(directory)) {
    const fs::path& path = entry.path();
    if (path.extension() == ".json" &&
        path.stem().string().find(".result") == std::string::npos) {
      scenarios.push_back(path);
    }
  }
  std::sort(scenarios.begin(), scenarios.end());
  int exit_code = kExitOk;
  for (const fs::path& path : scenarios) {
    fs::path output = path;
    output.replace_extension(".result.json");
    try {
      const ResultDocument document = assign_input(parse_scenario(slurp(path)));
      spit(output, write_result(document));
      const bool failed = require_robust && !document.robust;
      std::cout << path.filename().string() << " -> " << output.filename().string()
                << (failed ? " (not robust)" : "") << "\n";
      if (failed) exit_code = std::max(exit_code, kExitAssumption);
    } catch (const ParseError& error) {
      std::cerr << path.filename().string() << ": " << error.what() << "\n";
      exit_code = std::max(exit_code, kExitInput);
    }
  }
  return exit_code;
}

int run_schedule(const fs::path& result_path, const fs::path& output,
                 std::optional<double> safety, std::optional<double> v_ref) {
  ResultDocument document = read_result(slurp(result_path));
  const double v = v_ref.value_or(document.input.v_ref);
  double s;
  if (safety) {
    if (document.input.scenario && !document.input.scenario->safety.is_uniform()) {
      std::cerr << "--safety cannot override a per-pair safety matrix\n";
      return kExitInput;
    }
    s = *safety;
    if (document.input.scenario) {
      document.input.scenario->safety = SafetySpec::uniform(s);
    } else {
      document.input.raw_safety = s;
    }
  } else {
    s = document.input.safety_bound();
  }
  document.input.v_ref = v;
  document.input.sim.v_ref = v;

  document.schedule =
      build_schedule(document.result, document.input.build_weight_matrix(), s, v);
  spit(output, write_result(document));
  std::cout << "mu = " << round_to_9_digits(document.schedule->mu) << ", s = " << s
            << ", offset = " << round_to_9_digits(document.schedule->offset) << "\n";
  std::cout << "bound limits:";
  for (double a : document.schedule->saturation) {
    std::cout << ' ' << round_to_9_digits(a);
  }
  std::cout << "\nwrote " << output.string() << "\n";
  return kExitOk;
}

int write_frames(const ResultDocument& document, const std::vector<double>& frames,
                 const fs::path& directory) {
  if (frames.empty()) return kExitOk;
  if (!document.input.scenario || document.input.scenario->dim != 2) {
    std::cerr << "SVG frames need a 2-D geometric scenario; skipping\n";
    return kExitOk;
  }
  for (double t : frames) {
    std::ostringstream name;
    name << "frame_t" << round_to_9_digits(t) << ".svg";
    spit(directory / name.str(),
         svg::render_frame(*document.input.scenario, *document.schedule,
                           *document.trajectories, t));
    std::cout << "wrote " << (directory / name.str()).string() << "\n";
  }
  return kExitOk;
}

int report_and_exit(const ResultDocument& document) {
  const VerificationReport& report = *document.report;
  std::cout << "all_in_sets: " << (report.all_in_sets ? "true" : "false")
            << ", no_collisions: " << (report.no_collisions ? "true" : "false")
            << ", min pair distance: " << round_to_9_digits(report.min_pair_distance)
            << "\n";
  if (!report.implication_holds) {
    std::cerr << "containment did not imply separation; this indicates a bug\n";
  }
  return report.no_collisions ? kExitOk : kExitViolation;
}

int run_simulate(const fs::path& result_path, const fs::path& output,
                 std::optional<std::uint64_t> seed, const std::vector<double>& frames,
                 const fs::path& frames_dir, const fs::path& csv_path) {
  ResultDocument document = read_result(slurp(result_path));
  if (!document.input.scenario) {
    std::cerr << "simulation needs a geometric scenario, not raw weights\n";
    return kExitInput;
  }
  if (!document.schedule) {
    std::cerr << "no schedule present; run the schedule command first\n";
    return kExitInput;
  }
  SimConfig config = document.input.sim;
  config.v_ref = document.schedule->v_ref;
  if (seed) config.rng_seed = *seed;
  document.input.sim = config;

  document.trajectories = simulate(*document.input.scenario, document.result, config);
  document.report = verify_run(*document.trajectories, *document.schedule,
                               *document.input.scenario, config.v_max);
  spit(output, write_result(document));
  std::cout << "wrote " << output.string() << "\n";
  if (!csv_path.empty()) {
    std::ostringstream csv;
    write_trajectories_csv(csv, *document.trajectories, document.input.scenario->dim);
    spit(csv_path, csv.str());
    std::cout << "wrote " << csv_path.string() << "\n";
  }
  write_frames(document, frames, frames_dir);
  return report_and_exit(document);
}

int run_verify(const fs::path& result_path, const fs::path& output,
               const std::vector<double>& frames, const fs::path& frames_dir) {
  ResultDocument document = read_result(slurp(result_path));
  if (!document.input.scenario) {
    std::cerr << "verification needs a geometric scenario\n";
    return kExitInput;
  }
  if (!document.schedule || !document.trajectories) {
    std::cerr << "verification needs both a schedule and trajectories\n";
    return kExitInput;
  }
  document.report = verify_run(*document.trajectories, *document.schedule,
                               *document.input.scenario, document.input.sim.v_max);
  spit(output, write_result(document));
  std::cout << "wrote " << output.string() << "\n";
  write_frames(document, frames, frames_dir);
  return report_and_exit(document);
}

// Bundled eight-agent, six-target demonstration scenario.
ScenarioInput demo_scenario() {
  ScenarioInput input;
  Scenario scenario;
  scenario.dim = 2;
  scenario.initial_positions = {{75, 179}, {147, 75}, {119, 20}, {45, 55},
                                {13, 180}, {20, 54},  {199, 14}, {44, 193}};
  scenario.targets = {{28, 173}, {124, 156}, {123, 71},
                      {115, 11}, {70, 0},    {13, 47}};
  scenario.safety = SafetySpec::uniform(3.0);
  scenario.horizon = 9.0;
  input.scenario = std::move(scenario);
  for (int i = 1; i <= 8; ++i) input.agent_ids.push_back("a" + std::to_string(i));
  for (int j = 1; j <= 6; ++j) input.target_ids.push_back("g" + std::to_string(j));
  input.v_ref = 10.0;
  input.sim.v_ref = 10.0;
  input.sim.v_max = 13.0;
  input.sim.omega_max = 4.0;
  input.sim.k_heading = 4.0;
  input.sim.k_speed = 1.5;
  input.sim.disturbance_amplitude = 0.05;
  input.sim.heading_offset = 0.5;
  input.sim.rng_seed = 7;
  return input;
}

int run_demo(const fs::path& out_dir, std::optional<std::uint64_t> seed,
             std::vector<double> frames) {
  ScenarioInput input = demo_scenario();
  if (seed) input.sim.rng_seed = *seed;
  spit(out_dir / "demo.scenario.json", write_scenario(input));

  ResultDocument document = assign_input(input);
  print_orders(document);
  document.schedule = build_schedule(document.result, input.build_weight_matrix(),
                                     input.scenario->safety.bound(), input.v_ref);
  std::cout << "mu = " << round_to_9_digits(document.schedule->mu) << "\n";
  document.trajectories = simulate(*input.scenario, document.result, input.sim);
  document.report = verify_run(*document.trajectories, *document.schedule,
                               *input.scenario, input.sim.v_max);
  spit(out_dir / "demo.result.json", write_result(document));
  std::cout << "wrote " << (out_dir / "demo.result.json").string() << "\n";
  if (frames.empty()) frames = {1.0, 3.0, 5.0, 7.0};
  write_frames(document, frames, out_dir);
  return report_and_exit(document);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sequential bottleneck task assignment with collision-free position sets"};
  app.require_subcommand(1);

  std::string scenario_path, result_path, output, batch_dir, frames_dir = ".", csv_path,
              out_dir = ".";
  bool require_robust = false;
  std::optional<double> safety, v_ref;
  std::optional<std::uint64_t> seed;
  std::vector<double> frames;

  CLI::App* assign = app.add_subcommand("assign", "Compute the sequential assignment");
  assign->add_option("scenario", scenario_path, "scenario JSON file");
  assign->add_option("-o,--output", output, "result file (default: result.json)");
  assign->add_flag("--require-robust", require_robust,
                   "exit 2 unless every margin is positive");
  assign->add_option("--batch", batch_dir, "process every scenario in a directory");

  CLI::App* schedule = app.add_subcommand("schedule", "Attach safe-set parameters");
  schedule->add_option("result", result_path, "result JSON file")->required();
  schedule->add_option("-o,--output", output, "output file (default: input file)");
  schedule->add_option("--safety", safety, "global safety distance s");
  schedule->add_option("--vref", v_ref, "radius growth rate (m/s)");

  CLI::App* simulate = app.add_subcommand("simulate", "Run unicycle tracking and verify");
  simulate->add_option("result", result_path, "result JSON with a schedule")->required();
  simulate->add_option("-o,--output", output, "output file (default: input file)");
  simulate->add_option("--seed", seed, "override the disturbance seed");
  simulate->add_option("--frames", frames, "times for SVG frames")->delimiter(',');
  simulate->add_option("--frames-dir", frames_dir, "directory for SVG frames");
  simulate->add_option("--csv", csv_path, "also export trajectories as CSV");

  CLI::App* verify = app.add_subcommand("verify", "Re-check stored trajectories");
  verify->add_option("result", result_path, "result JSON with trajectories")->required();
  verify->add_option("-o,--output", output, "rewrite the result with a fresh report");
  verify->add_option("--frames", frames, "times for SVG frames")->delimiter(',');
  verify->add_option("--frames-dir", frames_dir, "directory for SVG frames");

  CLI::App* demo = app.add_subcommand("demo", "Run the bundled scenario end to end");
  demo->add_option("--out-dir", out_dir, "output directory");
  demo->add_option("--seed", seed, "override the disturbance seed");
  demo->add_option("--frames", frames, "times for SVG frames")->delimiter(',');

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(assign)) {
      if (!batch_dir.empty()) return run_batch_assign(batch_dir, require_robust);
      if (scenario_path.empty()) {
        std::cerr << "assign needs a scenario file or --batch\n";
        return kExitInput;
      }
      return run_assign(scenario_path, output.empty() ? "result.json" : output,
                        require_robust);
    }
    if (app.got_subcommand(schedule)) {
      return run_schedule(result_path, output.empty() ? result_path : output, safety,
                          v_ref);
    }
    if (app.got_subcommand(simulate)) {
      return run_simulate(result_path, output.empty() ? result_path : output, seed,
                          frames, frames_dir, csv_path);
    }
    if (app.got_subcommand(verify)) {
      return run_verify(result_path, output.empty() ? result_path : output, frames,
                        frames_dir);
    }
    if (app.got_subcommand(demo)) {
      return run_demo(out_dir, seed, frames);
    }
  } catch (const ParseError& error) {
    std::cerr << "error: " << error.what() << "\n";
    return kExitInput;
  } catch (const MarginTooSmallError& error) {
    std::cerr << "error: " << error.what() << "\n";
    return kExitAssumption;
  } catch (const NotRobustError& error) {
    std::cerr << "error: " << error.what() << "\n";
    return kExitAssumption;
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
