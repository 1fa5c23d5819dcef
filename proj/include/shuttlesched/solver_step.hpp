#pragma once

#include <vector>

#include "shuttlesched/instance.hpp"
#include "shuttlesched/solve_report.hpp"

namespace shuttle {

namespace step_dp {

// Load grid for step demand: {0} and every D(t_k) + C q that stays within
// D(T). Any feasible load vector rounds up onto this grid without increasing
// either objective, which is what makes the DP exact.
std::vector<Rat> vertex_grid(const Instance& inst);

// Exact minimum of the max waiting time for step demand with nu = 0:
// bottleneck path with exactly S arcs over the vertex grid, d_j = bar_tau(y_j).
SolveReport solve_max(const Instance& inst);

// Exact minimum of the average waiting time, same grid, min-sum arc weights
// int_y^{y'} (bar_tau(y') - bar_tau(u)) du.
SolveReport solve_ave(const Instance& inst);

}  // namespace step_dp

}  // namespace shuttle
