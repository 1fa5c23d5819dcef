#pragma once

#include <iosfwd>

#include "shuttlesched/instance.hpp"
#include "shuttlesched/solve_report.hpp"

namespace shuttle {

namespace noreturn_ave {

// f_ave(d, y, y') = int_y^{y'} (d - bar_tau(u)) du, with the bar_tau
// extension above D(T). Requires y <= y2.
Rat f_ave(const DemandCurve& curve, const Rat& d, const Rat& y, const Rat& y2);

enum class Mode {
  automatic,  // exact below a size threshold, fast above
  exact,      // rational arc weights and DP
  fast,       // double tables and DP; certified bounds padded by fp slack
};

// Shortest-path approximation over the (z, r) grid with step eta = C/M.
// Returns a feasible schedule; lower_bound = (min path weight)/D(T),
// upper_bound = g_ave of the reconstruction. Requires an increasing
// piecewise affine curve (alpha > 0), CS >= D(T) and eta < D(T).
SolveReport solve(const Instance& inst, long M, Mode mode = Mode::automatic);

// Explicit bound on upper_bound - lower_bound for a given M:
// ((T + nu C)/D(T) + gamma (S+1)) eta + gamma (S+1)^2 eta^2 / D(T),
// gamma = 2 (1/alpha + 2 nu).
Rat gap_bound(const Instance& inst, long M);

// Vertex/arc dump (exact weights) as CSV rows: z,r,z2,r2,weight.
void dump_graph(const Instance& inst, long M, std::ostream& out);

}  // namespace noreturn_ave

}  // namespace shuttle
