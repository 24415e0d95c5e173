#include "activetime/witness.hpp"

#include <algorithm>
#include <set>

namespace activetime::witness {

using reduction::JobProvenance;
using reduction::ReductionOutput;
using reduction::SlotName;

namespace {

int variable_count(const ReductionOutput& out) {
  // b = 2n + 2 by construction.
  return (out.instance.batch_size - 2) / 2;
}

// Slots that carry a job in any schedule realizing `assignment`: L, R,
// every clause slot, and one slot per gadget picked by the truth value.
std::vector<bool> active_profile(const ReductionOutput& out,
                                 const sat::Assignment& assignment) {
  const int horizon = out.instance.horizon;
  std::vector<bool> active(horizon, false);
  for (int s = 0; s < horizon; ++s) {
    const SlotName& name = out.timeline.names[s];
    switch (name.kind) {
      case SlotName::Kind::L:
      case SlotName::Kind::R:
      case SlotName::Kind::Clause:
        active[s] = true;
        break;
      case SlotName::Kind::VarPos:
        if (assignment.value(name.variable)) active[s] = true;
        break;
      case SlotName::Kind::VarNeg:
        if (!assignment.value(name.variable)) active[s] = true;
        break;
    }
  }
  return active;
}

struct ClauseJobView {
  const Job* job;
  int position;       // q
  int variable;
  bool negated;       // literal polarity, derived from which side of C(k)
  int clause_slot;
  int gadget_slot;    // the window endpoint inside the gadget
};

// Clause jobs of clause k ordered by position, with the literal each one
// stands for recovered from the window geometry: negative-side jobs end at
// the clause slot, positive-side jobs start there.
std::vector<ClauseJobView> clause_jobs_of(const ReductionOutput& out, int clause) {
  std::vector<ClauseJobView> views;
  for (const Job& job : out.instance.jobs) {
    const JobProvenance& p = out.provenance.at(job.id);
    if (p.kind != JobProvenance::Kind::ClauseJob || p.clause != clause) continue;
    ClauseJobView view{&job, p.position, 0, false, 0, 0};
    const SlotName& at_release = out.timeline.names[job.release];
    if (at_release.kind == SlotName::Kind::Clause) {
      view.clause_slot = job.release;
      view.gadget_slot = job.deadline;
      view.negated = false;
    } else {
      view.clause_slot = job.deadline;
      view.gadget_slot = job.release;
      view.negated = true;
    }
    view.variable = out.timeline.names[view.gadget_slot].variable;
    views.push_back(view);
  }
  std::sort(views.begin(), views.end(),
            [](const ClauseJobView& a, const ClauseJobView& b) {
              return a.position < b.position;
            });
  return views;
}

void check_total_on(const sat::Assignment& assignment, int n) {
  if (static_cast<int>(assignment.values.size()) != n)
    throw std::invalid_argument("assignment is not total on [1, n]");
  for (int i = 1; i <= n; ++i)
    if (!assignment.values.count(i))
      throw std::invalid_argument("assignment missing variable " + std::to_string(i));
}

}  // namespace

Schedule assignment_to_schedule(const ReductionOutput& out,
                                const sat::Assignment& assignment) {
  const int n = variable_count(out);
  check_total_on(assignment, n);
  if (assignment.true_count() != n / 2)
    throw WitnessError(WitnessErrorKind::Unbalanced,
                       "assignment sets " + std::to_string(assignment.true_count()) +
                           " of " + std::to_string(n) + " variables true");

  const std::vector<bool> active = active_profile(out, assignment);
  const int horizon = out.instance.horizon;

  // Lowest-position satisfied literal per clause; the translation needs
  // one per clause, so a miss is an unsatisfied-clause error.
  std::set<std::string> skip_clause_slot;
  int clause_count = 0;
  for (const SlotName& name : out.timeline.names)
    if (name.kind == SlotName::Kind::Clause) clause_count = std::max(clause_count, name.clause);
  for (int k = 1; k <= clause_count; ++k) {
    const Job* chosen = nullptr;
    for (const ClauseJobView& view : clause_jobs_of(out, k)) {
      if (assignment.value(view.variable) != view.negated) {
        chosen = view.job;
        break;
      }
    }
    if (chosen == nullptr)
      throw WitnessError(WitnessErrorKind::UnsatisfiedClause,
                         "assignment satisfies no literal of clause " + std::to_string(k));
    skip_clause_slot.insert(chosen->id);
  }

  Schedule schedule;
  for (const Job& job : out.instance.jobs) {
    const JobProvenance& p = out.provenance.at(job.id);
    std::vector<int> slots;
    switch (p.kind) {
      case JobProvenance::Kind::UnitFiller:
        slots.push_back(job.release);
        break;
      case JobProvenance::Kind::VariableChoice:
        slots.push_back(assignment.value(p.variable) ? job.release : job.deadline);
        break;
      case JobProvenance::Kind::ClauseJob:
        for (int s = job.release; s <= job.deadline; ++s) {
          if (!active[s]) continue;
          bool is_clause_slot = out.timeline.names[s].kind == SlotName::Kind::Clause;
          if (skip_clause_slot.count(job.id)) {
            if (!is_clause_slot) slots.push_back(s);
          } else {
            if (is_clause_slot || (s != job.release && s != job.deadline)) slots.push_back(s);
          }
        }
        break;
      case JobProvenance::Kind::CopyJob: {
        bool truth = assignment.value(p.variable);
        for (int s = job.release; s <= job.deadline; ++s) {
          if (!active[s]) continue;
          if (truth && s == 0) continue;             // true variables avoid L
          if (!truth && s == horizon - 1) continue;  // false variables avoid R
          slots.push_back(s);
        }
        break;
      }
    }
    if (static_cast<int>(slots.size()) != job.processing)
      throw std::logic_error("translation assigned " + std::to_string(slots.size()) +
                             " slots to job " + job.id + " needing " +
                             std::to_string(job.processing));
    schedule.assignments.emplace(job.id, std::move(slots));
  }
  return schedule;
}

sat::Assignment schedule_to_assignment(const ReductionOutput& out, const Schedule& schedule) {
  VerifyReport report = verify_schedule(out.instance, schedule);
  if (!report.valid)
    throw WitnessError(WitnessErrorKind::InvalidSchedule,
                       "schedule is not a valid complete schedule (" +
                           std::to_string(report.violations.size()) + " violations)");
  if (report.cost > out.target)
    throw WitnessError(WitnessErrorKind::CostExceedsTarget,
                       "schedule cost " + std::to_string(report.cost) +
                           " exceeds target " + std::to_string(out.target));

  std::vector<bool> occupied(out.instance.horizon, false);
  for (int s : schedule.occupied_slots()) {
    if (s < 0 || s >= out.instance.horizon)
      throw WitnessError(WitnessErrorKind::InvalidSchedule,
                         "occupied slot " + std::to_string(s) + " outside the horizon");
    occupied[s] = true;
  }

  // Occurrence truth values, read one gadget at a time.
  std::map<int, std::vector<bool>> occurrence_values;
  for (int s = 0; s < out.timeline.size(); ++s) {
    const SlotName& name = out.timeline.names[s];
    if (name.kind != SlotName::Kind::VarPos) continue;
    bool pos_active = occupied[s];
    bool neg_active = occupied[s + 1];
    if (pos_active && neg_active)
      throw WitnessError(WitnessErrorKind::GadgetBothActive,
                         "both slots of gadget " + reduction::slot_name_string(name) +
                             " are active");
    if (!pos_active && !neg_active)
      throw std::logic_error("gadget " + reduction::slot_name_string(name) +
                             " has no active slot in a complete schedule");
    occurrence_values[name.variable].push_back(pos_active);
  }

  sat::Assignment assignment;
  for (const auto& [variable, values] : occurrence_values) {
    for (bool value : values) {
      if (value != values.front())
        throw WitnessError(WitnessErrorKind::GadgetInconsistent,
                           "occurrences of variable " + std::to_string(variable) +
                               " disagree");
    }
    assignment.values[variable] = values.front();
  }

  const int n = variable_count(out);
  if (assignment.true_count() != n / 2)
    throw WitnessError(WitnessErrorKind::UnbalancedExtraction,
                       "extracted assignment sets " +
                           std::to_string(assignment.true_count()) + " of " +
                           std::to_string(n) + " variables true");
  return assignment;
}

RoundTripReport roundtrip_check(const sat::CnfFormula& formula) {
  RoundTripReport report;
  report.num_vars = formula.num_vars;
  report.num_clauses = static_cast<int>(formula.clauses.size());
  if (formula.num_vars > 8)
    throw sat::GuardError("roundtrip check limited to 8 variables");

  ReductionOutput out = reduction::build_reduction(formula);
  report.target = out.target;
  report.batch_size = out.instance.batch_size;
  report.horizon = out.instance.horizon;
  if (out.instance.horizon > 40)
    throw sat::GuardError("roundtrip check limited to reduction horizon 40");

  std::optional<sat::Assignment> sat_witness = sat::brute_balanced_sat(formula);
  std::optional<Solution> sched_witness = solve_exact(out.instance, out.target);

  report.balanced_sat_feasible = sat_witness.has_value();
  report.scheduling_feasible_at_t = sched_witness.has_value();
  report.agree = report.balanced_sat_feasible == report.scheduling_feasible_at_t;

  if (sat_witness && sched_witness) {
    Schedule forward = assignment_to_schedule(out, *sat_witness);
    VerifyReport forward_report = verify_schedule(out.instance, forward);
    if (!forward_report.valid || forward_report.cost != out.target)
      throw std::logic_error("forward translation produced a bad schedule");
    sat::Assignment extracted = schedule_to_assignment(out, sched_witness->schedule);
    if (!sat::balanced(extracted) || !sat::satisfies(formula, extracted))
      throw std::logic_error("backward translation produced a bad assignment");
    report.witnesses = {std::move(*sat_witness), std::move(forward)};
  }
  return report;
}

}  // namespace activetime::witness
