// atsched: command-line front end for the active time scheduling library.
//
// Exit codes: 0 success (verify: valid; roundtrip: verdicts agree),
// 1 I/O, parse or translation errors, 2 invalid schedule / disagreeing
// roundtrip, 64 usage errors.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "activetime/generator.hpp"
#include "activetime/json_io.hpp"
#include "activetime/reduction.hpp"
#include "activetime/sat.hpp"
#include "activetime/solve.hpp"
#include "activetime/witness.hpp"

namespace {

using namespace activetime;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw std::runtime_error("cannot open " + path);
  file << content;
}

sat::CnfFormula load_cnf(const std::string& path, bool balance) {
  sat::CnfFormula formula = sat::parse_dimacs(read_input(path));
  return balance ? sat::to_balanced(formula) : formula;
}

struct SolveOptions {
  std::string instance_path;
  std::string algo;
  std::string order_path;
  std::optional<int> budget;
  std::string out_path;
};

int run_solve(const SolveOptions& options) {
  Instance instance = io::instance_from_json(read_input(options.instance_path));
  std::optional<Solution> solution;
  if (options.algo == "exact") {
    solution = solve_exact(instance, options.budget);
  } else if (options.algo == "greedy") {
    solution = solve_greedy(instance);
  } else {
    std::vector<int> order;
    if (options.order_path.empty()) {
      order.resize(instance.horizon);
      for (int s = 0; s < instance.horizon; ++s) order[s] = s;
    } else {
      nlohmann::json parsed = nlohmann::json::parse(read_input(options.order_path));
      if (!parsed.is_array()) throw std::runtime_error("order file must hold a JSON array");
      for (const auto& entry : parsed) order.push_back(entry.get<int>());
    }
    solution = solve_minimal(instance, order);
  }
  write_output(options.out_path, io::solution_to_json(solution));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"active time scheduling: reductions, solvers and witnesses"};
  app.require_subcommand(1);

  std::string cnf_path, out_path, instance_path, schedule_path, reduction_path, assignment_path;
  bool balance = false;
  SolveOptions solve_options;
  int gen_jobs = 0, gen_horizon = 0, gen_batch = 1;
  std::uint64_t gen_seed = 0;

  CLI::App* reduce = app.add_subcommand("reduce", "compile a CNF formula into a scheduling instance");
  reduce->add_option("--cnf", cnf_path, "DIMACS CNF input ('-' for stdin)")->required();
  reduce->add_flag("--balance", balance, "apply the SAT -> Balanced SAT transform first");
  reduce->add_option("--out", out_path, "reduction JSON output ('-' for stdout)")->required();

  CLI::App* solve = app.add_subcommand("solve", "find an active slot set for an instance");
  solve->add_option("--instance", solve_options.instance_path, "instance JSON")->required();
  solve->add_option("--algo", solve_options.algo, "exact, greedy or minimal")
      ->required()
      ->check(CLI::IsMember({"exact", "greedy", "minimal"}));
  solve->add_option("--order", solve_options.order_path,
                    "JSON slot permutation for --algo minimal (default: identity)");
  int budget_value = 0;
  CLI::Option* budget_option =
      solve->add_option("--budget", budget_value, "decision budget for --algo exact");
  solve->add_option("--out", solve_options.out_path, "solution JSON output")->required();

  CLI::App* verify = app.add_subcommand("verify", "check a schedule against an instance");
  verify->add_option("--instance", instance_path, "instance JSON")->required();
  verify->add_option("--schedule", schedule_path, "schedule JSON")->required();

  CLI::App* witness_cmd = app.add_subcommand("witness", "translate witnesses across the reduction");
  witness_cmd->require_subcommand(1);
  CLI::App* forward = witness_cmd->add_subcommand(
      "forward", "balanced satisfying assignment -> cost-t schedule");
  forward->add_option("--reduction", reduction_path, "reduction JSON")->required();
  forward->add_option("--assignment", assignment_path, "assignment JSON")->required();
  forward->add_option("--out", out_path, "schedule JSON output")->required();
  CLI::App* backward = witness_cmd->add_subcommand(
      "backward", "cost-<=t schedule -> balanced satisfying assignment (stdout)");
  backward->add_option("--reduction", reduction_path, "reduction JSON")->required();
  backward->add_option("--schedule", schedule_path, "schedule JSON")->required();

  CLI::App* roundtrip = app.add_subcommand(
      "roundtrip", "check that the SAT and scheduling verdicts agree on one formula");
  roundtrip->add_option("--cnf", cnf_path, "DIMACS CNF input")->required();
  roundtrip->add_flag("--balance", balance, "apply the SAT -> Balanced SAT transform first");

  CLI::App* gen = app.add_subcommand("gen", "emit a seeded random instance");
  gen->add_option("--jobs", gen_jobs, "number of jobs")->required();
  gen->add_option("--horizon", gen_horizon, "number of slots")->required();
  gen->add_option("--batch", gen_batch, "batch size")->required();
  gen->add_option("--seed", gen_seed, "RNG seed")->required();
  gen->add_option("--out", out_path, "instance JSON output")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 64;
  }

  try {
    if (reduce->parsed()) {
      auto output = reduction::build_reduction(load_cnf(cnf_path, balance));
      write_output(out_path, io::reduction_to_json(output));
      return 0;
    }
    if (solve->parsed()) {
      if (budget_option->count() > 0) solve_options.budget = budget_value;
      return run_solve(solve_options);
    }
    if (verify->parsed()) {
      Instance instance = io::instance_from_json(read_input(instance_path));
      Schedule schedule = io::schedule_from_json(read_input(schedule_path));
      VerifyReport report = verify_schedule(instance, schedule);
      std::cout << io::verify_report_to_json(report);
      return report.valid ? 0 : 2;
    }
    if (forward->parsed()) {
      auto out = io::reduction_from_json(read_input(reduction_path));
      auto assignment = io::assignment_from_json(read_input(assignment_path));
      Schedule schedule = witness::assignment_to_schedule(out, assignment);
      write_output(out_path, io::schedule_to_json(schedule));
      return 0;
    }
    if (backward->parsed()) {
      auto out = io::reduction_from_json(read_input(reduction_path));
      Schedule schedule = io::schedule_from_json(read_input(schedule_path));
      sat::Assignment assignment = witness::schedule_to_assignment(out, schedule);
      std::cout << io::assignment_to_json(assignment);
      return 0;
    }
    if (roundtrip->parsed()) {
      witness::RoundTripReport report = witness::roundtrip_check(load_cnf(cnf_path, balance));
      std::cout << io::roundtrip_report_to_json(report);
      return report.agree ? 0 : 2;
    }
    if (gen->parsed()) {
      Instance instance = generate_instance(gen_jobs, gen_horizon, gen_batch, gen_seed);
      write_output(out_path, io::instance_to_json(instance));
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
