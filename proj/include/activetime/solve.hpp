#ifndef ACTIVETIME_SOLVE_HPP
#define ACTIVETIME_SOLVE_HPP

#include <optional>

#include "activetime/model.hpp"

namespace activetime {

// Feasibility oracle: is there a complete valid schedule using only slots
// in `active`? Solved as exact integral max-flow over the bipartite network
// source -> job (cap p) -> slot (cap 1, slot in window and active) -> sink
// (cap b); feasible iff the max flow equals the total processing demand.
// The returned schedule is read off the flow with jobs in ascending id
// order and slots ascending, so it is deterministic.
// Precondition: active ⊆ [0, horizon-1] (throws std::invalid_argument).
std::optional<Schedule> feasible_with(const Instance& instance, const ActiveSet& active);

struct Solution {
  int cost = 0;
  ActiveSet active;
  Schedule schedule;
};

// Minimum number of active slots admitting a complete schedule, with a
// witness. Among optima, returns the lexicographically smallest slot set
// (ascending sequence comparison). With `budget`, answers the decision
// problem: a minimum-cost witness of cost <= budget, or nullopt.
// Infeasible instances (even with every slot active) yield nullopt.
//
// Branch and bound: slots that are the unique window slot of some job are
// pre-forced active; the remaining slots are decided in ascending index
// order, include-branch first, pruning on |chosen| against the incumbent
// (seeded by solve_greedy) and on flow-oracle infeasibility of
// chosen ∪ undecided.
std::optional<Solution> solve_exact(const Instance& instance,
                                    std::optional<int> budget = std::nullopt);

// Left-to-right deactivation: start from all slots active, drop a slot iff
// the rest stays feasible. Returns nullopt iff the instance is infeasible.
std::optional<Solution> solve_greedy(const Instance& instance);

// Same deactivation loop but visiting slots in the given order, which must
// be a permutation of [0, horizon-1]. The result is a minimal feasible
// active set. Identity order reproduces solve_greedy.
std::optional<Solution> solve_minimal(const Instance& instance,
                                      const std::vector<int>& order);

}  // namespace activetime

#endif  // ACTIVETIME_SOLVE_HPP
