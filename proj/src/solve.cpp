#include "activetime/solve.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "activetime/max_flow.hpp"

namespace activetime {
namespace {

std::vector<const Job*> jobs_by_id(const Instance& instance) {
  std::vector<const Job*> jobs;
  jobs.reserve(instance.jobs.size());
  for (const Job& job : instance.jobs) jobs.push_back(&job);
  std::sort(jobs.begin(), jobs.end(),
            [](const Job* a, const Job* b) { return a->id < b->id; });
  return jobs;
}

// Ascending-sequence comparison; ties on the shared prefix go to the
// shorter set, though callers only compare equal-size sets.
bool lex_less(const std::vector<int>& a, const std::vector<int>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

std::optional<Schedule> feasible_with(const Instance& instance, const ActiveSet& active) {
  for (size_t i = 0; i < active.slots.size(); ++i) {
    int slot = active.slots[i];
    if (slot < 0 || slot >= instance.horizon)
      throw std::invalid_argument("active slot " + std::to_string(slot) +
                                  " outside [0, horizon-1]");
    if (i > 0 && active.slots[i - 1] >= slot)
      throw std::invalid_argument("active slots must be strictly ascending");
  }
  for (const Job& job : instance.jobs) {
    if (job.processing < 1)
      throw std::invalid_argument("job " + job.id + ": processing must be >= 1");
  }

  const std::vector<const Job*> jobs = jobs_by_id(instance);
  const int job_count = static_cast<int>(jobs.size());
  const int slot_count = active.size();
  const int source = 0;
  const int sink = 1 + job_count + slot_count;

  MaxFlow network(sink + 1);
  long long demand = 0;
  std::vector<std::vector<std::pair<int, int>>> job_slot_edges(job_count);

  for (int j = 0; j < job_count; ++j) {
    network.add_edge(source, 1 + j, jobs[j]->processing);
    demand += jobs[j]->processing;
    for (int s = 0; s < slot_count; ++s) {
      int slot = active.slots[s];
      if (slot >= jobs[j]->release && slot <= jobs[j]->deadline) {
        int edge = network.add_edge(1 + j, 1 + job_count + s, 1);
        job_slot_edges[j].emplace_back(edge, slot);
      }
    }
  }
  for (int s = 0; s < slot_count; ++s)
    network.add_edge(1 + job_count + s, sink, instance.batch_size);

  if (network.run(source, sink) != demand) return std::nullopt;

  Schedule schedule;
  for (int j = 0; j < job_count; ++j) {
    std::vector<int>& slots = schedule.assignments[jobs[j]->id];
    for (const auto& [edge, slot] : job_slot_edges[j]) {
      if (network.edge_flow(edge) > 0) slots.push_back(slot);
    }
  }
  return schedule;
}

std::optional<Solution> solve_greedy(const Instance& instance) {
  return solve_minimal(instance, [&] {
    std::vector<int> identity(std::max(instance.horizon, 0));
    std::iota(identity.begin(), identity.end(), 0);
    return identity;
  }());
}

std::optional<Solution> solve_minimal(const Instance& instance, const std::vector<int>& order) {
  const int horizon = std::max(instance.horizon, 0);
  std::vector<bool> seen(horizon, false);
  if (static_cast<int>(order.size()) != horizon)
    throw std::invalid_argument("order is not a permutation of [0, horizon-1]");
  for (int slot : order) {
    if (slot < 0 || slot >= horizon || seen[slot])
      throw std::invalid_argument("order is not a permutation of [0, horizon-1]");
    seen[slot] = true;
  }

  ActiveSet active = ActiveSet::all(horizon);
  if (!feasible_with(instance, active)) return std::nullopt;

  for (int slot : order) {
    ActiveSet candidate = active.without(slot);
    if (feasible_with(instance, candidate)) active = std::move(candidate);
  }

  Solution solution;
  solution.schedule = *feasible_with(instance, active);
  solution.cost = active.size();
  solution.active = std::move(active);
  return solution;
}

namespace {

struct ExactSearch {
  const Instance& instance;
  std::vector<std::pair<int, int>> windows_by_deadline;  // (deadline, release)
  std::vector<int> nonforced;   // undecided slots, ascending
  std::vector<int> chosen;      // sorted ascending, contains all forced slots
  std::vector<int> best_set;
  int best_cost;
  int budget;  // prune bound; INT_MAX when absent

  int threshold() const { return std::min(best_cost, budget); }

  ActiveSet with_tail(size_t next) const {
    // chosen ∪ nonforced[next..]; both parts are sorted and disjoint.
    ActiveSet set;
    set.slots.reserve(chosen.size() + nonforced.size() - next);
    std::merge(chosen.begin(), chosen.end(),
               nonforced.begin() + static_cast<std::ptrdiff_t>(next), nonforced.end(),
               std::back_inserter(set.slots));
    return set;
  }

  bool covered(int release, int deadline) const {
    auto it = std::lower_bound(chosen.begin(), chosen.end(), release);
    return it != chosen.end() && *it <= deadline;
  }

  // Admissible cost bound: a job with no chosen slot in its window needs at
  // least one more slot, and jobs with pairwise-disjoint windows need
  // pairwise-distinct ones. Greedy earliest-deadline sweep over the
  // uncovered windows counts such a disjoint family.
  int uncovered_disjoint() const {
    int count = 0;
    int last_taken = -1;
    for (const auto& [deadline, release] : windows_by_deadline) {
      if (release <= last_taken || covered(release, deadline)) continue;
      ++count;
      last_taken = deadline;
    }
    return count;
  }

  void offer(std::vector<int> candidate) {
    int cost = static_cast<int>(candidate.size());
    if (cost < best_cost || (cost == best_cost && lex_less(candidate, best_set))) {
      best_cost = cost;
      best_set = std::move(candidate);
    }
  }

  // Invariant on entry: chosen ∪ nonforced[next..] is feasible.
  void dfs(size_t next) {
    int needed = uncovered_disjoint();
    if (static_cast<int>(chosen.size()) + needed > threshold()) return;
    if (needed == 0) {
      ActiveSet bare;
      bare.slots = chosen;
      if (feasible_with(instance, bare)) {
        // Every deeper completion is a strict superset, hence costlier.
        offer(chosen);
        return;
      }
    }
    if (next == nonforced.size()) return;

    int slot = nonforced[next];
    if (static_cast<int>(chosen.size()) + 1 <= threshold()) {
      auto at = std::lower_bound(chosen.begin(), chosen.end(), slot);
      chosen.insert(at, slot);
      dfs(next + 1);
      chosen.erase(std::lower_bound(chosen.begin(), chosen.end(), slot));
    }
    if (feasible_with(instance, with_tail(next + 1))) dfs(next + 1);
  }
};

}  // namespace

std::optional<Solution> solve_exact(const Instance& instance, std::optional<int> budget) {
  const int horizon = std::max(instance.horizon, 0);

  auto greedy = solve_greedy(instance);
  if (!greedy) return std::nullopt;

  std::vector<bool> forced(horizon, false);
  for (const Job& job : instance.jobs) {
    if (job.release == job.deadline && job.release >= 0 && job.release < horizon)
      forced[job.release] = true;
  }

  ExactSearch search{instance};
  for (const Job& job : instance.jobs)
    search.windows_by_deadline.emplace_back(job.deadline, job.release);
  std::sort(search.windows_by_deadline.begin(), search.windows_by_deadline.end());
  for (int s = 0; s < horizon; ++s)
    (forced[s] ? search.chosen : search.nonforced).push_back(s);
  search.best_cost = greedy->cost;
  search.best_set = greedy->active.slots;
  search.budget = budget ? *budget : std::numeric_limits<int>::max();
  if (static_cast<int>(search.chosen.size()) <= search.threshold()) search.dfs(0);

  if (budget && search.best_cost > *budget) return std::nullopt;

  Solution solution;
  solution.cost = search.best_cost;
  solution.active.slots = std::move(search.best_set);
  solution.schedule = *feasible_with(instance, solution.active);
  return solution;
}

}  // namespace activetime
