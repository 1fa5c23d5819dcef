#pragma once

#include <cstdint>

#include "shuttlesched/rational.hpp"
#include "shuttlesched/schedule.hpp"

namespace shuttle {

struct SolveStats {
  long iterations = 0;       // binary-search iterations / DP layers
  long graph_vertices = 0;
  long graph_arcs = 0;
  long enumerated = 0;       // oracle candidate count
  double wall_seconds = 0;   // excluded from determinism guarantees
};

// Result of a solver run: a feasible schedule plus a certified interval.
// lower_bound <= OPT <= upper_bound, and upper_bound is the value of the
// returned schedule (except for the pi = 0 average-return case, where only
// the infimum exists and no_optimal_solution is set).
struct SolveReport {
  Schedule schedule;
  Rat lower_bound;
  Rat upper_bound;
  bool no_optimal_solution = false;
  SolveStats stats;

  double lb() const { return to_double(lower_bound); }
  double ub() const { return to_double(upper_bound); }
  double gap() const { return to_double(upper_bound - lower_bound); }
};

}  // namespace shuttle
