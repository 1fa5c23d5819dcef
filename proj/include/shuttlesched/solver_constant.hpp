#pragma once

#include <vector>

#include "shuttlesched/instance.hpp"
#include "shuttlesched/solve_report.hpp"

namespace shuttle {

// Stationary-point structure for the single-shuttle average-return program
// P(D_s): a prefix of full loads, an affinely decreasing middle block, zeros
// after. full_count = a, last_nonzero = theta(a).
struct KktCandidate {
  long full_count = 0;
  long last_nonzero = 0;
  std::vector<Rat> loads;  // x_1..x_theta
  Rat objective;           // sum (j-1) pi x_j + nu/2 sum x_j^2
};

// All candidates surviving the 0 <= x <= C / nonincreasing filter, one per
// admissible a in {0..floor(D_s/C)}. Requires pi > 0; nu = 0 yields the
// single front-loaded candidate.
std::vector<KktCandidate> kkt_candidates(const Rat& per_shuttle_demand,
                                         const Rat& capacity, const Rat& nu,
                                         const Rat& pi);

// All users present from t = 0, no returns: y_j = j D/S at d_j = nu D / S,
// optimal value nu D / S for both objectives. Throws when CS < D(T).
SolveReport solve_noreturn_constant(const Instance& inst);

// All users present from t = 0, returns allowed, max waiting time:
// value nu D/S + (ceil(D/(CS)) - 1) pi with the synchronized full-load plan.
SolveReport solve_return_max_constant(const Instance& inst);

// All users present from t = 0, returns allowed, average waiting time.
// Equal per-shuttle split plus the best KKT candidate; pi = 0 reports the
// infimum nu D / (2S) with no_optimal_solution set.
SolveReport solve_return_ave_constant(const Instance& inst);

}  // namespace shuttle
