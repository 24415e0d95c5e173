#ifndef ACTIVETIME_WITNESS_HPP
#define ACTIVETIME_WITNESS_HPP

#include <optional>
#include <utility>

#include "activetime/reduction.hpp"
#include "activetime/sat.hpp"
#include "activetime/solve.hpp"

namespace activetime::witness {

enum class WitnessErrorKind {
  Unbalanced,            // forward: assignment does not set exactly n/2 true
  UnsatisfiedClause,     // forward: no literal of some clause is satisfied
  InvalidSchedule,       // backward: schedule fails verify_schedule
  CostExceedsTarget,     // backward: schedule cost > t
  GadgetBothActive,      // backward: a variable gadget has two active slots
  GadgetInconsistent,    // backward: instances of one variable disagree
  UnbalancedExtraction,  // backward: extracted truth values are not n/2 true
};

class WitnessError : public std::runtime_error {
 public:
  WitnessError(WitnessErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}
  WitnessErrorKind kind() const { return kind_; }

 private:
  WitnessErrorKind kind_;
};

// Builds the cost-t schedule certifying a balanced satisfying assignment:
// unit fillers pin L, R and the clause slots; each variable-choice job
// takes the gadget's left slot when its variable is true, the right slot
// otherwise; per clause the lowest-position satisfied literal's job skips
// the clause slot while the rest route through it; copy jobs fill every
// active slot in their windows, using L and skipping R for false variables
// and the opposite for true ones.
Schedule assignment_to_schedule(const reduction::ReductionOutput& out,
                                const sat::Assignment& assignment);

// Reads a complete valid schedule of cost <= t back into an assignment:
// an occurrence is true iff its gadget's left slot carries a job. Checks
// that every gadget has exactly one active slot, that all occurrences of
// a variable agree, and that exactly half the variables are true; all of
// these hold for any valid cost-<=t schedule, so a failure signals a
// corrupted input or a solver bug and raises the matching WitnessError.
sat::Assignment schedule_to_assignment(const reduction::ReductionOutput& out,
                                       const Schedule& schedule);

struct RoundTripReport {
  int num_vars = 0;
  int num_clauses = 0;
  int target = 0;
  int batch_size = 0;
  int horizon = 0;
  bool balanced_sat_feasible = false;
  bool scheduling_feasible_at_t = false;
  bool agree = false;
  // Present when both sides are feasible: the first balanced satisfying
  // assignment and the schedule it translates to.
  std::optional<std::pair<sat::Assignment, Schedule>> witnesses;
};

// Decides the formula by brute force and the compiled instance by the
// budget-t exact solver, and reports whether the two verdicts agree. When
// both are feasible the translations are cross-checked in both directions.
// Guards: num_vars <= 8 and reduction horizon <= 40.
RoundTripReport roundtrip_check(const sat::CnfFormula& formula);

}  // namespace activetime::witness

#endif  // ACTIVETIME_WITNESS_HPP
