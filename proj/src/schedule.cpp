#include "shuttlesched/schedule.hpp"

#include <algorithm>

namespace shuttle {

Schedule Schedule::from_doubles(const std::vector<double>& d,
                                const std::vector<double>& y) {
  Schedule s;
  s.departures.reserve(d.size());
  s.loads.reserve(y.size());
  for (double x : d) s.departures.emplace_back(x);
  for (double x : y) s.loads.emplace_back(x);
  return s;
}

std::string constraint_name(Constraint c) {
  switch (c) {
    case Constraint::capacity_i: return "i";
    case Constraint::load_monotone_ii: return "ii";
    case Constraint::departure_monotone_iii: return "iii";
    case Constraint::total_demand_iv: return "iv";
    case Constraint::loading_done_v: return "v";
    case Constraint::return_trip_vi: return "vi";
    case Constraint::nonnegative: return "nonneg";
    case Constraint::length: return "length";
  }
  return "?";
}

namespace {

void report(FeasibilityReport& r, Constraint c, size_t j, const Rat& excess) {
  r.feasible = false;
  r.violations.push_back({c, j, to_double(excess)});
}

}  // namespace

FeasibilityReport check_feasible(const Instance& inst, const Schedule& s,
                                 bool allow_return, const Rat& tol) {
  FeasibilityReport rep;
  const size_t n = s.size();
  if (s.loads.size() != n) {
    report(rep, Constraint::length, 0, Rat(0));
    return rep;
  }
  if (!allow_return && n != static_cast<size_t>(inst.fleet_size)) {
    report(rep, Constraint::length, n,
           Rat(static_cast<long>(n) - inst.fleet_size));
    return rep;
  }
  if (n == 0) {
    report(rep, Constraint::total_demand_iv, 0, inst.demand.total());
    return rep;
  }
  const Rat& D = inst.demand.total();
  Rat prev_d(0), prev_y(0);
  for (size_t j = 0; j < n; ++j) {
    const Rat& d = s.departures[j];
    const Rat& y = s.loads[j];
    if (d < -tol || y < -tol)
      report(rep, Constraint::nonnegative, j + 1, -std::min(d, y));
    Rat x = y - prev_y;
    if (x > inst.capacity + tol)
      report(rep, Constraint::capacity_i, j + 1, x - inst.capacity);
    if (y < prev_y - tol)
      report(rep, Constraint::load_monotone_ii, j + 1, prev_y - y);
    if (j > 0 && d < prev_d - tol)
      report(rep, Constraint::departure_monotone_iii, j + 1, prev_d - d);
    Rat y_clamped = std::max(Rat(0), std::min(y, D));
    Rat ready = inst.demand.bar_tau(y_clamped) + inst.load_rate * x;
    if (d < ready - tol)
      report(rep, Constraint::loading_done_v, j + 1, ready - d);
    prev_d = d;
    prev_y = y;
  }
  Rat gap = s.loads.back() - D;
  if (gap > tol || gap < -tol)
    report(rep, Constraint::total_demand_iv, n, abs(gap));
  if (allow_return) {
    const size_t S = static_cast<size_t>(inst.fleet_size);
    for (size_t j = 0; j + S < n; ++j) {
      Rat x_next = s.loads[j + S] - s.loads[j + S - 1];
      Rat earliest = s.departures[j] + inst.return_time + inst.load_rate * x_next;
      if (s.departures[j + S] < earliest - tol)
        report(rep, Constraint::return_trip_vi, j + 1,
               earliest - s.departures[j + S]);
    }
  }
  return rep;
}

FeasibilityReport check_feasible(const Instance& inst, const Schedule& s,
                                 bool allow_return) {
  return check_feasible(inst, s, allow_return, Rat(1, 1000000000));
}

namespace {

Rat clamp_to_domain(const Rat& y, const Rat& D) {
  return std::max(Rat(0), std::min(y, D));
}

}  // namespace

Rat eval_gmax(const Instance& inst, const Schedule& s) {
  const Rat& D = inst.demand.total();
  Rat best(0);
  bool any = false;
  Rat prev_y(0);
  for (size_t j = 0; j < s.size(); ++j) {
    if (s.loads[j] > prev_y) {
      Rat wait = s.departures[j] - inst.demand.tau(clamp_to_domain(prev_y, D));
      if (!any || wait > best) best = wait;
      any = true;
    }
    prev_y = s.loads[j];
  }
  return any ? best : Rat(0);
}

Rat eval_gmax_alt(const Instance& inst, const Schedule& s) {
  const Rat& D = inst.demand.total();
  Rat best(0);
  bool any = false;
  Rat prev_y(0);
  for (size_t j = 0; j < s.size(); ++j) {
    Rat wait = s.departures[j] - inst.demand.tau(clamp_to_domain(prev_y, D));
    if (!any || wait > best) best = wait;
    any = true;
    prev_y = s.loads[j];
  }
  return best;
}

Rat eval_gave(const Instance& inst, const Schedule& s) {
  Rat acc(0);
  Rat prev_y(0);
  for (size_t j = 0; j < s.size(); ++j) {
    const Rat& y = s.loads[j];
    if (y > prev_y) {
      acc += s.departures[j] * (y - prev_y) -
             inst.demand.integrate_bar_tau(prev_y, y);
    }
    prev_y = y;
  }
  return acc / inst.demand.total();
}

Schedule canonicalize_departures(const Instance& inst,
                                 const std::vector<Rat>& loads) {
  const Rat& D = inst.demand.total();
  Rat prev_y(0);
  for (const Rat& y : loads) {
    if (y < prev_y) throw DomainError("canonicalize: loads must be nondecreasing");
    if (y - prev_y > inst.capacity)
      throw DomainError("canonicalize: load step exceeds capacity");
    prev_y = y;
  }
  if (loads.empty() || loads.back() != D)
    throw DomainError("canonicalize: loads must end at D(T)");
  Schedule s;
  s.loads = loads;
  s.departures.reserve(loads.size());
  prev_y = 0;
  Rat prev_d(0);
  for (size_t j = 0; j < loads.size(); ++j) {
    Rat ready = inst.demand.bar_tau(loads[j]) + inst.load_rate * (loads[j] - prev_y);
    Rat d = j == 0 ? ready : std::max(prev_d, ready);
    s.departures.push_back(d);
    prev_d = d;
    prev_y = loads[j];
  }
  return s;
}

}  // namespace shuttle
