#pragma once

#include <utility>
#include <vector>

#include "shuttlesched/instance.hpp"
#include "shuttlesched/solve_report.hpp"

namespace shuttle {

namespace noreturn_max {

// One greedy left-to-right evaluation of the feasibility system for target
// waiting time h: y_j is the largest load reachable by departure j when every
// wait is capped at h. Feasible iff the loads reach D(T) within S departures.
struct GreedyResult {
  bool feasible = false;
  std::vector<Rat> loads;
};
GreedyResult greedy_loads(const Instance& inst, const Rat& h);

// Binary search on h with certified interval [h-, h+]. Requires rho > 0;
// throws InfeasibleError when CS < D(T). If trace is nonnull, every probed
// (h, feasible) pair is appended in search order.
SolveReport solve(const Instance& inst, const Rat& rho,
                  std::vector<std::pair<Rat, bool>>* trace = nullptr);

}  // namespace noreturn_max

}  // namespace shuttle
