// Acceptance suite: end-to-end checks of the reduction arithmetic, the
// SAT <-> scheduling equivalence, witness translations, solver-vs-oracle
// agreement, approximation bounds and CLI determinism. Prints one line per
// criterion; exits nonzero if any fails.

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "activetime/generator.hpp"
#include "activetime/json_io.hpp"
#include "activetime/reduction.hpp"
#include "activetime/sat.hpp"
#include "activetime/solve.hpp"
#include "activetime/witness.hpp"
#include "oracles.hpp"

using namespace activetime;
using reduction::JobProvenance;
using reduction::ReductionOutput;
using reduction::SlotName;

namespace {

struct Checker {
  bool ok = true;
  std::string first_failure;
  int checks = 0;

  void expect(bool condition, const std::string& what) {
    ++checks;
    if (!condition && ok) {
      ok = false;
      first_failure = what;
    }
  }
};

struct RecordedCase {
  sat::CnfFormula formula;
  ReductionOutput out;
  std::optional<sat::Assignment> sat_witness;
  std::optional<Solution> sched_witness;
};

std::vector<RecordedCase> equivalence_cases;

int total_literals(const sat::CnfFormula& formula) {
  int total = 0;
  for (const auto& clause : formula.clauses) total += static_cast<int>(clause.size());
  return total;
}

void check_reduction_arithmetic(Checker& check, const sat::CnfFormula& formula) {
  ReductionOutput out = reduction::build_reduction(formula);
  const int n = formula.num_vars;
  const int m = static_cast<int>(formula.clauses.size());
  const int literals = total_literals(formula);

  check.expect(out.target == m + 2 + literals, "target formula");
  check.expect(out.instance.batch_size == 2 * n + 2, "batch size formula");
  check.expect(out.instance.horizon == 2 + m + 2 * literals, "horizon formula");

  std::map<JobProvenance::Kind, int> counts;
  for (const Job& job : out.instance.jobs) ++counts[out.provenance.at(job.id).kind];
  int expected_fillers = 2 * (out.instance.batch_size - n / 2);
  for (const auto& clause : formula.clauses)
    expected_fillers += out.instance.batch_size - n - static_cast<int>(clause.size()) + 1;
  check.expect(counts[JobProvenance::Kind::VariableChoice] == literals, "choice job count");
  check.expect(counts[JobProvenance::Kind::UnitFiller] == expected_fillers, "filler job count");
  check.expect(counts[JobProvenance::Kind::ClauseJob] == literals, "clause job count");
  check.expect(counts[JobProvenance::Kind::CopyJob] == literals + n, "copy job count");
  check.expect(reduction::uniform_processing_check(out), "uniform processing");
}

void criterion_reduction_arithmetic(Checker& check) {
  check_reduction_arithmetic(check, io::formula_from_json(
      R"({"num_vars":2,"clauses":[[1,2],[-1,-2]]})"));

  oracle::Rng rng(11);
  for (int round = 0; round < 40; ++round) {
    int n = 2 * rng.range(1, 3);
    check_reduction_arithmetic(
        check, oracle::random_canonical_formula(rng, n, 4, std::min(n, 4)));
  }
  for (int round = 0; round < 10; ++round) {
    sat::CnfFormula formula = oracle::random_canonical_formula(rng, 4, 3, 3);
    ReductionOutput out = reduction::build_reduction(formula);
    check.expect(out.instance.batch_size == 10, "n = 4 must give b = 10");
  }
}

void record_equivalence_case(Checker& check, const sat::CnfFormula& formula) {
  witness::RoundTripReport report = witness::roundtrip_check(formula);
  check.expect(report.agree, "verdicts disagree on " + sat::serialize_dimacs(formula));

  RecordedCase record;
  record.formula = formula;
  record.out = reduction::build_reduction(formula);
  record.sat_witness = sat::brute_balanced_sat(formula);
  record.sched_witness = solve_exact(record.out.instance, record.out.target);
  check.expect(record.sat_witness.has_value() == report.balanced_sat_feasible,
               "oracle verdict unstable");
  check.expect(record.sched_witness.has_value() == report.scheduling_feasible_at_t,
               "solver verdict unstable");
  equivalence_cases.push_back(std::move(record));
}

void criterion_equivalence_exhaustive(Checker& check) {
  std::vector<sat::CnfFormula> corpus = oracle::all_canonical_formulas(2, 2, 2);
  check.expect(corpus.size() > 100, "exhaustive corpus unexpectedly small");
  for (const sat::CnfFormula& formula : corpus) record_equivalence_case(check, formula);
}

void criterion_equivalence_randomized(Checker& check) {
  oracle::Rng rng(20260809);
  for (int generated = 0; generated < 100; ++generated) {
    int n = rng.flip() ? 2 : 4;
    sat::CnfFormula formula =
        oracle::random_canonical_formula(rng, n, 3, std::min(n, 3));
    check.expect(2 + static_cast<int>(formula.clauses.size()) + 2 * total_literals(formula) <= 26,
                 "randomized corpus horizon bound");
    record_equivalence_case(check, formula);
  }
}

void criterion_forward_witness(Checker& check) {
  int verified = 0;
  for (const RecordedCase& record : equivalence_cases) {
    if (!record.sat_witness) continue;
    const int n = record.formula.num_vars;
    Schedule schedule = witness::assignment_to_schedule(record.out, *record.sat_witness);
    VerifyReport report = verify_schedule(record.out.instance, schedule);
    check.expect(report.valid, "forward schedule invalid");
    check.expect(report.cost == record.out.target, "forward schedule cost differs from t");

    std::map<int, int> loads;
    for (const auto& [id, slots] : schedule.assignments)
      for (int slot : slots) ++loads[slot];
    for (int s = 0; s < record.out.timeline.size(); ++s) {
      int load = loads.count(s) ? loads.at(s) : 0;
      switch (record.out.timeline.names[s].kind) {
        case SlotName::Kind::L:
        case SlotName::Kind::R:
        case SlotName::Kind::Clause:
          check.expect(load == record.out.instance.batch_size, "L/R/C load must equal b");
          break;
        default:
          check.expect(load <= 1 + 2 * n, "gadget slot load exceeds 1 + 2n");
      }
    }
    ++verified;
  }
  check.expect(verified > 50, "forward corpus unexpectedly small");
}

void criterion_backward_witness(Checker& check) {
  int verified = 0;
  for (const RecordedCase& record : equivalence_cases) {
    if (!record.sched_witness) continue;
    const int n = record.formula.num_vars;
    check.expect(record.sched_witness->cost <= record.out.target, "solver exceeded budget");
    sat::Assignment extracted;
    try {
      extracted = witness::schedule_to_assignment(record.out, record.sched_witness->schedule);
    } catch (const std::exception& e) {
      check.expect(false, std::string("extraction failed: ") + e.what());
      continue;
    }
    check.expect(sat::balanced(extracted), "extraction unbalanced");
    check.expect(oracle::eval_formula(record.formula, extracted),
                 "extraction does not satisfy the formula");

    std::map<int, int> copy_loads;
    for (int s = 0; s < record.out.timeline.size(); ++s)
      if (record.out.timeline.names[s].kind == SlotName::Kind::Clause) copy_loads[s] = 0;
    for (const auto& [id, slots] : record.sched_witness->schedule.assignments) {
      if (record.out.provenance.at(id).kind != JobProvenance::Kind::CopyJob) continue;
      for (int slot : slots)
        if (copy_loads.count(slot)) ++copy_loads[slot];
    }
    for (const auto& [slot, count] : copy_loads)
      check.expect(count == n, "clause slot not used by exactly n copy jobs");
    ++verified;
  }
  check.expect(verified > 50, "backward corpus unexpectedly small");
}

std::vector<Instance> solver_corpus;

void criterion_solver_oracle(Checker& check) {
  oracle::Rng rng(600613);
  for (int round = 0; round < 200; ++round) {
    Instance instance = oracle::random_instance(rng, 8, 12, 4);
    solver_corpus.push_back(instance);
    auto solved = solve_exact(instance);
    auto scanned = oracle::enumerate_exact(instance);
    check.expect(solved.has_value() == scanned.has_value(), "feasibility verdicts differ");
    if (solved && scanned) {
      check.expect(solved->cost == scanned->cost, "optimal cost differs from subset scan");
      check.expect(solved->active.slots == scanned->active.slots,
                   "tie-break differs from subset scan");
      check.expect(verify_schedule(instance, solved->schedule).valid, "witness invalid");
    }
  }

  oracle::Rng flow_rng(131071);
  for (int round = 0; round < 200; ++round) {
    Instance instance = oracle::random_instance(flow_rng, 5, 8, 4);
    ActiveSet active = oracle::random_subset(flow_rng, instance.horizon);
    auto by_flow = feasible_with(instance, active);
    auto by_enumeration = oracle::enumerate_schedule(instance, active);
    check.expect(by_flow.has_value() == by_enumeration.has_value(),
                 "flow and assignment enumeration disagree");
    if (by_flow)
      check.expect(verify_schedule(instance, *by_flow).valid, "flow witness invalid");
  }
}

void criterion_approximation_bounds(Checker& check) {
  oracle::Rng rng(271);
  int feasible = 0;
  for (const Instance& instance : solver_corpus) {
    auto exact = solve_exact(instance);
    if (!exact) continue;
    ++feasible;
    auto greedy = solve_greedy(instance);
    check.expect(greedy.has_value(), "greedy missed a feasible instance");
    if (greedy) check.expect(greedy->cost <= 2 * exact->cost, "greedy above twice optimal");

    for (int trial = 0; trial < 5; ++trial) {
      std::vector<int> order(instance.horizon);
      for (int s = 0; s < instance.horizon; ++s) order[s] = s;
      for (int i = instance.horizon - 1; i > 0; --i)
        std::swap(order[i], order[rng.range(0, i)]);
      auto minimal = solve_minimal(instance, order);
      check.expect(minimal.has_value(), "minimal missed a feasible instance");
      if (minimal)
        check.expect(minimal->cost <= 3 * exact->cost, "minimal above three times optimal");
    }
  }
  check.expect(feasible > 50, "approximation corpus unexpectedly small");
}

std::string cli_path;

std::string slurp(const std::filesystem::path& path) {
  std::ifstream file(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

int run_cli(const std::string& args) {
  std::string command = "\"" + cli_path + "\" " + args;
  int status = std::system(command.c_str());
  if (status < 0) return -1;
  return WEXITSTATUS(status);
}

void criterion_cli_determinism(Checker& check) {
  namespace fs = std::filesystem;
  if (cli_path.empty()) {
    check.expect(false, "no --cli path given");
    return;
  }
  fs::path dir = fs::temp_directory_path() / "activetime_acceptance";
  fs::remove_all(dir);
  fs::create_directories(dir);

  fs::path cnf = dir / "fixture.cnf";
  std::ofstream(cnf) << "p cnf 2 2\n1 2 0\n-1 -2 0\n";

  auto run_twice = [&](const std::string& args_template, const fs::path& first,
                       const fs::path& second, const std::string& label) {
    int code_a = run_cli(args_template + " --out " + first.string());
    int code_b = run_cli(args_template + " --out " + second.string());
    check.expect(code_a == 0 && code_b == 0, label + " run failed");
    std::string bytes_a = slurp(first), bytes_b = slurp(second);
    check.expect(!bytes_a.empty() && bytes_a == bytes_b, label + " output not byte-stable");
    return bytes_a;
  };

  run_twice("gen --jobs 7 --horizon 10 --batch 3 --seed 7", dir / "gen_a.json",
            dir / "gen_b.json", "gen");
  std::string other_seed = run_twice("gen --jobs 7 --horizon 10 --batch 3 --seed 8",
                                     dir / "gen_c.json", dir / "gen_d.json", "gen");
  check.expect(other_seed != slurp(dir / "gen_a.json"), "different seeds gave equal bytes");

  run_twice("reduce --cnf " + cnf.string(), dir / "red_a.json", dir / "red_b.json", "reduce");
  run_twice("solve --instance " + (dir / "gen_a.json").string() + " --algo exact",
            dir / "sol_a.json", dir / "sol_b.json", "solve");
  run_twice("solve --instance " + (dir / "red_a.json").string() + " --algo greedy",
            dir / "sol_c.json", dir / "sol_d.json", "solve greedy");

  fs::remove_all(dir);
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--cli") cli_path = argv[i + 1];

  struct Criterion {
    const char* title;
    std::function<void(Checker&)> run;
  };
  const std::vector<Criterion> criteria = {
      {"reduction arithmetic (t, b, horizon, job counts; n=4 gives b=10)",
       criterion_reduction_arithmetic},
      {"equivalence, exhaustive over two-variable formulas", criterion_equivalence_exhaustive},
      {"equivalence, randomized corpus (n in {2,4}, m <= 3, width <= 3)",
       criterion_equivalence_randomized},
      {"forward witnesses: valid, cost exactly t, exact slot loads", criterion_forward_witness},
      {"backward witnesses: balanced satisfying extractions, copy-slot counts",
       criterion_backward_witness},
      {"solver against unpruned subset scan and assignment enumeration",
       criterion_solver_oracle},
      {"approximation bounds: greedy <= 2 OPT, minimal <= 3 OPT", criterion_approximation_bounds},
      {"CLI determinism: gen/reduce/solve byte-stable across runs", criterion_cli_determinism},
  };

  int failures = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Checker check;
    try {
      criteria[i].run(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    std::printf("[%zu/%zu] %s %s (%d checks)%s%s\n", i + 1, criteria.size(),
                check.ok ? "PASS" : "FAIL", criteria[i].title, check.checks,
                check.ok ? "" : " - ", check.first_failure.c_str());
    if (!check.ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
