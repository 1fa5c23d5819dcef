#include "shuttlesched/solver_noreturn_max.hpp"

namespace shuttle {
namespace noreturn_max {

GreedyResult greedy_loads(const Instance& inst, const Rat& h) {
  const Rat& D = inst.demand.total();
  GreedyResult res;
  res.loads.reserve(inst.fleet_size);
  Rat y(0);
  for (long j = 0; j < inst.fleet_size; ++j) {
    y = inst.demand.sup_feasible_load(y, h, inst.load_rate, inst.capacity);
    res.loads.push_back(y);
    if (y == D) break;  // remaining departures stay at D(T)
  }
  res.feasible = !res.loads.empty() && res.loads.back() == D;
  return res;
}

namespace {

// Schedule of the feasibility system at target h: d_j = h + tau(y_{j-1}),
// padded with empty departures up to S slots.
Schedule schedule_at(const Instance& inst, const Rat& h,
                     const std::vector<Rat>& loads) {
  Schedule s;
  Rat prev(0);
  for (const Rat& y : loads) {
    s.departures.push_back(h + inst.demand.tau(prev));
    s.loads.push_back(y);
    prev = y;
  }
  while (s.size() < static_cast<size_t>(inst.fleet_size)) {
    s.departures.push_back(h + inst.demand.tau(prev));
    s.loads.push_back(prev);
  }
  return s;
}

}  // namespace

SolveReport solve(const Instance& inst, const Rat& rho,
                  std::vector<std::pair<Rat, bool>>* trace) {
  if (rho <= 0) throw DomainError("noreturn_max::solve: rho must be positive");
  const Rat& D = inst.demand.total();
  if (inst.capacity * Rat(inst.fleet_size) < D)
    throw InfeasibleError("noreturn_max::solve: CS < D(T)");

  Rat lo(0);
  Rat hi = inst.horizon + inst.load_rate * D;
  SolveReport rep;
  while (hi - lo > rho) {
    Rat h = (hi + lo) / 2;
    bool ok = greedy_loads(inst, h).feasible;
    if (trace) trace->emplace_back(h, ok);
    if (ok)
      hi = h;
    else
      lo = h;
    ++rep.stats.iterations;
  }
  GreedyResult final_run = greedy_loads(inst, hi);
  // hi is only ever replaced by feasible probes, so this cannot fail.
  if (!final_run.feasible)
    throw InfeasibleError("noreturn_max::solve: upper probe infeasible");
  rep.schedule = schedule_at(inst, hi, final_run.loads);
  rep.lower_bound = lo;
  rep.upper_bound = hi;
  return rep;
}

}  // namespace noreturn_max
}  // namespace shuttle
