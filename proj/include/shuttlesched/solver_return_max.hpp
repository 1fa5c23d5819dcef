#pragma once

#include <iosfwd>

#include "shuttlesched/instance.hpp"
#include "shuttlesched/solve_report.hpp"

namespace shuttle {

namespace return_max {

// f_max(l, y, y') = max(l, bar_tau(y')) + nu (y' - y) - tau(y) for y' > y,
// 0 when y' = y (the equal-load branch wins at the overlap).
Rat f_max(const DemandCurve& curve, const Rat& nu, const Rat& l, const Rat& y,
          const Rat& y2);

// Upper bound on the loading start of the last departure:
// T + nu D(T)/S + (ceil(D(T)/(CS)) - 1) pi.
Rat loading_horizon(const Instance& inst);

// Departure-count cap for optimal solutions:
// (2 ceil(T/pi) + 1) S + (nu/pi + 1/C) D(T).
Rat departure_cap(const Instance& inst);

// Min-bottleneck path over states (z, q, r): per-shuttle loading-start times
// q and cumulative loads r on the eta = C/M grid, z the first shuttle's load
// in the cycle. Exponential in S; refuses S > 2 unless force is set.
// Requires pi > 0 and an increasing piecewise affine curve.
SolveReport solve(const Instance& inst, long M, bool force = false);

// Arc dump as CSV (flattened q/r vectors); practical for small M and S = 1.
void dump_graph(const Instance& inst, long M, std::ostream& out);

}  // namespace return_max

}  // namespace shuttle
