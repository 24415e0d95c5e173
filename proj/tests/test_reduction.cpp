#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "activetime/json_io.hpp"
#include "activetime/reduction.hpp"
#include "oracles.hpp"

using namespace activetime;
using namespace activetime::reduction;

namespace {

sat::CnfFormula formula_of(int num_vars, std::vector<std::vector<int>> clauses) {
  sat::CnfFormula formula;
  formula.num_vars = num_vars;
  for (const auto& raw : clauses) {
    sat::Clause clause;
    for (int lit : raw) clause.push_back({std::abs(lit), lit < 0});
    formula.clauses.push_back(std::move(clause));
  }
  return formula;
}

// (x1 ∨ x2) ∧ (¬x1 ∨ ¬x2), the running two-variable example.
sat::CnfFormula fixture() { return formula_of(2, {{1, 2}, {-1, -2}}); }

int total_literals(const sat::CnfFormula& formula) {
  int total = 0;
  for (const auto& clause : formula.clauses) total += static_cast<int>(clause.size());
  return total;
}

}  // namespace

TEST_CASE("reduction of the fixture matches the hand computation") {
  ReductionOutput out = build_reduction(fixture());

  CHECK(out.target == 8);
  CHECK(out.instance.batch_size == 6);
  CHECK(out.instance.horizon == 12);

  const std::vector<std::string> expected_timeline = {
      "L",         "C:1",       "V:1:1:pos", "V:1:1:neg", "V:2:1:pos", "V:2:1:neg",
      "V:1:2:pos", "V:1:2:neg", "V:2:2:pos", "V:2:2:neg", "C:2",       "R"};
  REQUIRE(out.timeline.size() == 12);
  for (int s = 0; s < 12; ++s)
    CHECK(slot_name_string(out.timeline.names[s]) == expected_timeline[s]);

  // window and processing of every non-filler job, by id
  const std::map<std::string, std::tuple<int, int, int>> expected = {
      {"var:1:1", {2, 3, 1}},    {"var:2:1", {4, 5, 1}},   {"var:1:2", {6, 7, 1}},
      {"var:2:2", {8, 9, 1}},    {"clause:1:1", {1, 2, 1}}, {"clause:1:2", {1, 4, 2}},
      {"clause:2:1", {7, 10, 2}}, {"clause:2:2", {9, 10, 1}}, {"copy:1:0", {0, 2, 2}},
      {"copy:1:1", {3, 6, 2}},   {"copy:1:2", {7, 11, 3}},  {"copy:2:0", {0, 4, 3}},
      {"copy:2:1", {5, 8, 2}},   {"copy:2:2", {9, 11, 2}}};
  for (const auto& [id, shape] : expected) {
    const Job* job = out.instance.find_job(id);
    REQUIRE_MESSAGE(job != nullptr, id);
    CHECK(job->release == std::get<0>(shape));
    CHECK(job->deadline == std::get<1>(shape));
    CHECK(job->processing == std::get<2>(shape));
  }

  // three fillers on each clause slot, five on L and R
  int fillers_at_l = 0, fillers_at_r = 0, fillers_at_c1 = 0;
  for (const Job& job : out.instance.jobs) {
    if (out.provenance.at(job.id).kind != JobProvenance::Kind::UnitFiller) continue;
    CHECK(job.release == job.deadline);
    if (job.release == 0) ++fillers_at_l;
    if (job.release == 11) ++fillers_at_r;
    if (job.release == 1) ++fillers_at_c1;
  }
  CHECK(fillers_at_l == 5);
  CHECK(fillers_at_r == 5);
  CHECK(fillers_at_c1 == 3);

  CHECK(out.instance.jobs.size() == 30);
  REQUIRE(out.occurrences.at(1).size() == 2);  // x1 has three copy jobs
  CHECK(out.occurrences.at(1)[0].clause == 1);
  CHECK_FALSE(out.occurrences.at(1)[0].negated);
  CHECK(out.occurrences.at(1)[1].clause == 2);
  CHECK(out.occurrences.at(1)[1].negated);
}

TEST_CASE("any four-variable formula gets batch size ten") {
  sat::CnfFormula formula = formula_of(4, {{-1, -2, 3}, {4}});
  ReductionOutput out = build_reduction(formula);
  CHECK(out.instance.batch_size == 10);
}

TEST_CASE("clause job processing follows the two-sided position rule") {
  // clause 1 = (¬x1 ∨ ¬x2 ∨ x3) has two negative literals
  ReductionOutput out = build_reduction(formula_of(4, {{-1, -2, 3}, {4}}));
  CHECK(out.instance.find_job("clause:1:1")->processing == 2);
  CHECK(out.instance.find_job("clause:1:2")->processing == 1);
  CHECK(out.instance.find_job("clause:1:3")->processing == 1);

  // negative-side jobs end at the clause slot, positive-side jobs start there
  const Job* neg_side = out.instance.find_job("clause:1:1");
  const Job* pos_side = out.instance.find_job("clause:1:3");
  CHECK(out.timeline.names[neg_side->deadline].kind == SlotName::Kind::Clause);
  CHECK(out.timeline.names[pos_side->release].kind == SlotName::Kind::Clause);
}

TEST_CASE("build_reduction rejects broken preconditions") {
  CHECK_THROWS_AS(build_reduction(formula_of(1, {{1}})), std::invalid_argument);  // odd n
  CHECK_THROWS_AS(build_reduction(formula_of(2, {{1}})), std::invalid_argument);  // x2 unused
  CHECK_THROWS_AS(build_reduction(formula_of(2, {{1, 1}, {2}})), std::invalid_argument);
  CHECK_THROWS_AS(build_reduction(formula_of(2, {{1, -1}, {2}})), std::invalid_argument);
}

TEST_CASE("reduction invariants hold across a random corpus") {
  oracle::Rng rng(271828);
  for (int round = 0; round < 50; ++round) {
    int n = 2 * rng.range(1, 3);
    sat::CnfFormula formula = oracle::random_canonical_formula(rng, n, 4, std::min(n, 4));
    ReductionOutput out = build_reduction(formula);

    const int m = static_cast<int>(formula.clauses.size());
    const int literals = total_literals(formula);
    CHECK(out.target == m + 2 + literals);
    CHECK(out.instance.batch_size == 2 * n + 2);
    CHECK(out.instance.horizon == 2 + m + 2 * literals);
    CHECK_NOTHROW(out.instance.validate());

    // job counts by provenance kind
    std::map<JobProvenance::Kind, int> counts;
    for (const Job& job : out.instance.jobs) ++counts[out.provenance.at(job.id).kind];
    int expected_fillers = 2 * (out.instance.batch_size - n / 2);
    for (const auto& clause : formula.clauses)
      expected_fillers += out.instance.batch_size - n - static_cast<int>(clause.size()) + 1;
    CHECK(counts[JobProvenance::Kind::VariableChoice] == literals);
    CHECK(counts[JobProvenance::Kind::UnitFiller] == expected_fillers);
    CHECK(counts[JobProvenance::Kind::ClauseJob] == literals);
    CHECK(counts[JobProvenance::Kind::CopyJob] == literals + n);

    // timeline partition: L first, R last, adjacent gadget pairs, and the
    // clause slot between its negative and positive gadgets
    CHECK(out.timeline.names.front().kind == SlotName::Kind::L);
    CHECK(out.timeline.names.back().kind == SlotName::Kind::R);
    for (int s = 0; s < out.timeline.size(); ++s) {
      const SlotName& name = out.timeline.names[s];
      if (name.kind == SlotName::Kind::VarPos) {
        SlotName partner = name;
        partner.kind = SlotName::Kind::VarNeg;
        REQUIRE(s + 1 < out.timeline.size());
        CHECK(out.timeline.names[s + 1] == partner);
      }
    }
    int cursor = 1;
    for (int k = 1; k <= m; ++k) {
      int negatives = 0, positives = 0;
      for (const auto& literal : formula.clauses[k - 1])
        (literal.negated ? negatives : positives)++;
      for (int g = 0; g < negatives; ++g) {
        CHECK(out.timeline.names[cursor].kind == SlotName::Kind::VarPos);
        cursor += 2;
      }
      CHECK(out.timeline.names[cursor].kind == SlotName::Kind::Clause);
      CHECK(out.timeline.names[cursor].clause == k);
      ++cursor;
      for (int g = 0; g < positives; ++g) {
        CHECK(out.timeline.names[cursor].kind == SlotName::Kind::VarPos);
        cursor += 2;
      }
    }
    CHECK(cursor == out.timeline.size() - 1);

    // occurrence table: instance j in 1..r, matching the clause order
    for (const auto& [variable, occurrences] : out.occurrences) {
      for (size_t j = 0; j < occurrences.size(); ++j) {
        const Job* choice =
            out.instance.find_job("var:" + std::to_string(variable) + ":" + std::to_string(j + 1));
        REQUIRE(choice != nullptr);
        CHECK(choice->processing == 1);
        CHECK(choice->deadline == choice->release + 1);
      }
      if (occurrences.size() > 1)
        for (size_t j = 1; j < occurrences.size(); ++j)
          CHECK(occurrences[j - 1].clause <= occurrences[j].clause);
    }

    // copy windows of one variable: pairwise disjoint and, with the
    // variable's own gadget pairs, covering every slot
    for (const auto& [variable, occurrences] : out.occurrences) {
      std::vector<std::pair<int, int>> windows;
      for (const Job& job : out.instance.jobs) {
        const JobProvenance& p = out.provenance.at(job.id);
        if (p.kind == JobProvenance::Kind::CopyJob && p.variable == variable)
          windows.emplace_back(job.release, job.deadline);
      }
      CHECK(windows.size() == occurrences.size() + 1);
      std::sort(windows.begin(), windows.end());
      std::vector<bool> covered(out.instance.horizon, false);
      for (size_t w = 0; w < windows.size(); ++w) {
        if (w > 0) CHECK(windows[w - 1].second < windows[w].first);
        for (int s = windows[w].first; s <= windows[w].second; ++s) {
          CHECK_FALSE(covered[s]);
          covered[s] = true;
        }
      }
      for (int s = 0; s < out.instance.horizon; ++s) {
        const SlotName& name = out.timeline.names[s];
        bool own_gadget = (name.kind == SlotName::Kind::VarPos ||
                           name.kind == SlotName::Kind::VarNeg) &&
                          name.variable == variable;
        CHECK((covered[s] || own_gadget));
      }
    }

    CHECK(uniform_processing_check(out));
  }
}

TEST_CASE("uniform_processing_check catches a perturbed processing time") {
  ReductionOutput out = build_reduction(fixture());
  REQUIRE(uniform_processing_check(out));
  for (Job& job : out.instance.jobs) {
    if (job.id == "clause:1:2") job.processing += 1;
  }
  CHECK_FALSE(uniform_processing_check(out));
}

TEST_CASE("build_reduction is deterministic") {
  std::string first = io::reduction_to_json(build_reduction(fixture()));
  std::string second = io::reduction_to_json(build_reduction(fixture()));
  CHECK(first == second);
}

TEST_CASE("reduction JSON round-trips and rebuilds the occurrence table") {
  oracle::Rng rng(1618);
  for (int round = 0; round < 10; ++round) {
    int n = 2 * rng.range(1, 2);
    sat::CnfFormula formula = oracle::random_canonical_formula(rng, n, 3, std::min(n, 3));
    ReductionOutput out = build_reduction(formula);
    std::string bytes = io::reduction_to_json(out);
    ReductionOutput loaded = io::reduction_from_json(bytes);
    CHECK(io::reduction_to_json(loaded) == bytes);
    CHECK(loaded.target == out.target);
    REQUIRE(loaded.occurrences.size() == out.occurrences.size());
    for (const auto& [variable, occurrences] : out.occurrences) {
      const auto& reloaded = loaded.occurrences.at(variable);
      REQUIRE(reloaded.size() == occurrences.size());
      for (size_t j = 0; j < occurrences.size(); ++j) {
        CHECK(reloaded[j].clause == occurrences[j].clause);
        CHECK(reloaded[j].negated == occurrences[j].negated);
      }
    }
  }
}

TEST_CASE("reduction JSON loader rejects corrupted documents") {
  std::string bytes = io::reduction_to_json(build_reduction(fixture()));
  CHECK_THROWS(io::reduction_from_json("{}"));

  // breaking a gadget pair must fail timeline validation
  std::string broken = bytes;
  auto at = broken.find("V:1:1:neg");
  REQUIRE(at != std::string::npos);
  broken.replace(at, 9, "V:9:9:neg");
  CHECK_THROWS(io::reduction_from_json(broken));
}

TEST_CASE("slot names parse back") {
  for (const char* text : {"L", "R", "C:3", "V:2:1:pos", "V:2:1:neg"})
    CHECK(slot_name_string(parse_slot_name(text)) == text);
  CHECK_THROWS(parse_slot_name("V:2:1"));
  CHECK_THROWS(parse_slot_name("Q:1"));
  CHECK_THROWS(parse_slot_name("C:0"));
}
