#ifndef ACTIVETIME_REDUCTION_HPP
#define ACTIVETIME_REDUCTION_HPP

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "activetime/model.hpp"
#include "activetime/sat.hpp"

namespace activetime::reduction {

// Symbolic name of one timeline slot. A variable gadget is the adjacent
// slot pair (VarPos, VarNeg): VarPos is the left slot whose activation
// means "this occurrence is true", VarNeg the right slot meaning "false".
struct SlotName {
  enum class Kind { L, R, Clause, VarPos, VarNeg };
  Kind kind = Kind::L;
  int clause = 0;    // 1-based, Kind::Clause only
  int variable = 0;  // 1-based, VarPos/VarNeg only
  int instance = 0;  // 1-based occurrence index, VarPos/VarNeg only

  bool operator==(const SlotName&) const = default;
};

std::string slot_name_string(const SlotName& name);
SlotName parse_slot_name(const std::string& text);

// Bijection slot index <-> SlotName. L is slot 0, R the last slot, and
// each clause block lays out negative-literal gadgets, the clause slot,
// then positive-literal gadgets.
struct TimelineMap {
  std::vector<SlotName> names;  // indexed by slot

  int size() const { return static_cast<int>(names.size()); }
  int index_of(const SlotName& name) const;  // -1 if absent
};

struct JobProvenance {
  enum class Kind { UnitFiller, VariableChoice, ClauseJob, CopyJob };
  Kind kind = Kind::UnitFiller;
  int slot = -1;      // UnitFiller: pinned slot
  int variable = 0;   // VariableChoice/CopyJob
  int instance = 0;   // VariableChoice: occurrence index j
  int clause = 0;     // ClauseJob
  int position = 0;   // ClauseJob: literal position q in canonical order
  int segment = -1;   // CopyJob: 0..r

  bool operator==(const JobProvenance&) const = default;
};

// One literal occurrence as laid out on the timeline.
struct Occurrence {
  int clause = 0;  // 1-based
  bool negated = false;
};

struct ReductionOutput {
  Instance instance;
  int target = 0;  // t
  TimelineMap timeline;
  std::map<std::string, JobProvenance> provenance;
  // occurrences[i] lists variable i's instances j = 1..r_i in timeline order.
  std::map<int, std::vector<Occurrence>> occurrences;
};

// Compiles a Balanced SAT formula into a scheduling instance with
// t = m + 2 + Σ n_k, b = 2n + 2 and horizon 2 + m + 2 Σ n_k.
// Preconditions: even variable count, every variable occurs in some
// clause, no clause repeats a variable (throws std::invalid_argument).
ReductionOutput build_reduction(const sat::CnfFormula& formula);

// Self-check of the compiler: every clause and copy job's processing time
// must equal 1 + the number of full variable gadgets and clause slots
// strictly inside its window, recounted here by walking the timeline.
bool uniform_processing_check(const ReductionOutput& output);

}  // namespace activetime::reduction

#endif  // ACTIVETIME_REDUCTION_HPP
