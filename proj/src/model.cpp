#include "activetime/model.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace activetime {

const Job* Instance::find_job(const std::string& id) const {
  for (const Job& job : jobs) {
    if (job.id == id) return &job;
  }
  return nullptr;
}

long long Instance::total_processing() const {
  long long total = 0;
  for (const Job& job : jobs) total += job.processing;
  return total;
}

void Instance::validate() const {
  if (batch_size < 1) throw std::invalid_argument("batch_size must be >= 1");
  if (horizon < 0) throw std::invalid_argument("horizon must be >= 0");
  std::unordered_set<std::string> seen;
  for (const Job& job : jobs) {
    if (!seen.insert(job.id).second)
      throw std::invalid_argument("duplicate job id: " + job.id);
    if (job.processing < 1)
      throw std::invalid_argument("job " + job.id + ": processing must be >= 1");
    if (job.release > job.deadline)
      throw std::invalid_argument("job " + job.id + ": release > deadline");
    if (job.release < 0 || job.deadline > horizon - 1)
      throw std::invalid_argument("job " + job.id + ": window outside [0, horizon-1]");
  }
}

ActiveSet ActiveSet::all(int horizon) {
  ActiveSet set;
  set.slots.resize(std::max(horizon, 0));
  for (int s = 0; s < horizon; ++s) set.slots[s] = s;
  return set;
}

bool ActiveSet::contains(int slot) const {
  return std::binary_search(slots.begin(), slots.end(), slot);
}

ActiveSet ActiveSet::without(int slot) const {
  ActiveSet out;
  out.slots.reserve(slots.size());
  for (int s : slots)
    if (s != slot) out.slots.push_back(s);
  return out;
}

std::vector<int> Schedule::occupied_slots() const {
  std::set<int> used;
  for (const auto& [id, slots] : assignments) used.insert(slots.begin(), slots.end());
  return {used.begin(), used.end()};
}

int Schedule::cost() const { return static_cast<int>(occupied_slots().size()); }

const char* violation_kind_name(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::WindowBreach: return "window_breach";
    case ViolationKind::ProcessingShortfall: return "processing_shortfall";
    case ViolationKind::ProcessingExcess: return "processing_excess";
    case ViolationKind::BatchOverflow: return "batch_overflow";
    case ViolationKind::DuplicateSlot: return "duplicate_slot";
  }
  return "unknown";
}

VerifyReport verify_schedule(const Instance& instance, const Schedule& schedule) {
  for (const auto& [id, slots] : schedule.assignments) {
    if (instance.find_job(id) == nullptr)
      throw std::invalid_argument("schedule references unknown job id: " + id);
  }

  VerifyReport report;
  std::unordered_map<int, int> load;

  for (const Job& job : instance.jobs) {
    static const std::vector<int> kEmpty;
    auto it = schedule.assignments.find(job.id);
    const std::vector<int>& slots = it == schedule.assignments.end() ? kEmpty : it->second;

    std::set<int> distinct;
    for (int slot : slots) {
      if (!distinct.insert(slot).second) {
        report.violations.push_back({ViolationKind::DuplicateSlot, job.id, slot,
                                     "job " + job.id + " occupies slot " +
                                         std::to_string(slot) + " more than once"});
        continue;
      }
      if (slot < job.release || slot > job.deadline) {
        report.violations.push_back({ViolationKind::WindowBreach, job.id, slot,
                                     "job " + job.id + " scheduled at slot " +
                                         std::to_string(slot) + " outside [" +
                                         std::to_string(job.release) + ", " +
                                         std::to_string(job.deadline) + "]"});
      }
      ++load[slot];
    }
    int count = static_cast<int>(distinct.size());
    if (count < job.processing) {
      report.violations.push_back({ViolationKind::ProcessingShortfall, job.id, -1,
                                   "job " + job.id + " has " + std::to_string(count) +
                                       " of " + std::to_string(job.processing) + " slots"});
    } else if (count > job.processing) {
      report.violations.push_back({ViolationKind::ProcessingExcess, job.id, -1,
                                   "job " + job.id + " has " + std::to_string(count) +
                                       " of " + std::to_string(job.processing) + " slots"});
    }
  }

  std::vector<int> overloaded;
  for (const auto& [slot, count] : load) {
    if (count > instance.batch_size) overloaded.push_back(slot);
  }
  std::sort(overloaded.begin(), overloaded.end());
  for (int slot : overloaded) {
    report.violations.push_back({ViolationKind::BatchOverflow, "", slot,
                                 "slot " + std::to_string(slot) + " carries " +
                                     std::to_string(load[slot]) + " jobs, batch size is " +
                                     std::to_string(instance.batch_size)});
  }

  report.cost = static_cast<int>(load.size());
  report.valid = report.violations.empty();
  return report;
}

}  // namespace activetime
