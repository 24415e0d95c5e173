#ifndef ACTIVETIME_MODEL_HPP
#define ACTIVETIME_MODEL_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace activetime {

// One schedulable task. The window [release, deadline] is inclusive on both
// ends, so a job with release == deadline has a one-slot window.
struct Job {
  std::string id;
  int release = 0;
  int deadline = 0;
  int processing = 1;

  int window_size() const { return deadline - release + 1; }
};

// A job set plus the batch size b and the slot horizon T. All job windows
// are expected to lie in [0, horizon-1]; `validate` enforces that and the
// id-uniqueness invariant at IO boundaries. Degenerate combinations that
// only affect solvability (p > window, horizon 0 with jobs) are reported
// by the solvers, not here.
struct Instance {
  std::vector<Job> jobs;
  int batch_size = 1;
  int horizon = 0;

  const Job* find_job(const std::string& id) const;
  long long total_processing() const;

  // Throws std::invalid_argument on a broken invariant.
  void validate() const;
};

// Set of slot indices, kept sorted ascending with no duplicates.
struct ActiveSet {
  std::vector<int> slots;

  static ActiveSet all(int horizon);
  bool contains(int slot) const;
  ActiveSet without(int slot) const;
  int size() const { return static_cast<int>(slots.size()); }

  bool operator==(const ActiveSet&) const = default;
};

// Per-job assignment of occupied slots. Producers in this library always
// emit strictly ascending slot lists; the vector representation still
// admits duplicates so that verify_schedule can flag them on foreign input.
struct Schedule {
  std::map<std::string, std::vector<int>> assignments;

  // Distinct slots carrying at least one job.
  int cost() const;
  std::vector<int> occupied_slots() const;
};

enum class ViolationKind {
  WindowBreach,
  ProcessingShortfall,
  ProcessingExcess,
  BatchOverflow,
  DuplicateSlot,
};

const char* violation_kind_name(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string job;   // empty for slot-level violations
  int slot = -1;     // -1 when not slot-specific
  std::string detail;
};

struct VerifyReport {
  bool valid = false;
  int cost = 0;
  std::vector<Violation> violations;
};

// Checks every Schedule invariant and full coverage of processing demands.
// A schedule naming a job id absent from the instance is a structural
// error (std::invalid_argument), distinct from a validity failure. Jobs
// missing from the schedule are treated as having an empty assignment.
VerifyReport verify_schedule(const Instance& instance, const Schedule& schedule);

}  // namespace activetime

#endif  // ACTIVETIME_MODEL_HPP
