#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "shuttlesched/instance.hpp"
#include "shuttlesched/rational.hpp"

namespace shuttle {

// Paired nondecreasing sequences: departure times d and cumulative loads y,
// with implicit y_0 = 0. Departure j carries y_j - y_{j-1} users.
struct Schedule {
  std::vector<Rat> departures;
  std::vector<Rat> loads;

  Schedule() = default;
  Schedule(std::vector<Rat> d, std::vector<Rat> y)
      : departures(std::move(d)), loads(std::move(y)) {}

  static Schedule from_doubles(const std::vector<double>& d,
                               const std::vector<double>& y);

  size_t size() const { return departures.size(); }
  bool empty() const { return departures.empty(); }
};

enum class Constraint {
  capacity_i,
  load_monotone_ii,
  departure_monotone_iii,
  total_demand_iv,
  loading_done_v,
  return_trip_vi,
  nonnegative,
  length,
};

std::string constraint_name(Constraint c);

struct Violation {
  Constraint constraint;
  size_t index;      // 1-based departure index
  double magnitude;  // how far past the constraint, in native units
};

struct FeasibilityReport {
  bool feasible = true;
  std::vector<Violation> violations;
};

// Checks the program constraints. Without returns the schedule must have
// exactly S departures and y_S = D(T); with returns any finite length works,
// y_N = D(T), and d_j + pi + nu*(y_{j+S} - y_{j+S-1}) <= d_{j+S} is enforced
// for j <= N - S. Comparisons tolerate `tol` (exact when tol = 0).
FeasibilityReport check_feasible(const Instance& inst, const Schedule& s,
                                 bool allow_return, const Rat& tol);
FeasibilityReport check_feasible(const Instance& inst, const Schedule& s,
                                 bool allow_return);

// Maximum waiting time over nonempty departures; 0 when every departure is
// empty (unreachable for valid instances since D(T) > 0).
Rat eval_gmax(const Instance& inst, const Schedule& s);

// Same maximum taken over all departures (Claim-1 form); >= eval_gmax.
Rat eval_gmax_alt(const Instance& inst, const Schedule& s);

// Average waiting time: (1/D(T)) sum_j int_{y_{j-1}}^{y_j} (d_j - bar_tau).
Rat eval_gave(const Instance& inst, const Schedule& s);

// Earliest feasible departures for given loads (no-return):
// d_1 = bar_tau(y_1) + nu*y_1, d_j = max(d_{j-1}, bar_tau(y_j) + nu*x_j).
Schedule canonicalize_departures(const Instance& inst,
                                 const std::vector<Rat>& loads);

}  // namespace shuttle
