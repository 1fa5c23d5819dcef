#include "shuttlesched/solver_constant.hpp"

#include <algorithm>

namespace shuttle {

namespace {

void require_constant(const Instance& inst, const char* who) {
  if (inst.demand.kind() != CurveKind::constant)
    throw PreconditionError(std::string(who) + ": demand must be constant");
}

Rat candidate_objective(const std::vector<Rat>& x, const Rat& nu, const Rat& pi) {
  Rat obj(0);
  for (size_t j = 0; j < x.size(); ++j)
    obj += pi * Rat(static_cast<long>(j)) * x[j] + nu * x[j] * x[j] / 2;
  return obj;
}

// Interleave S copies of a per-shuttle plan (loads x_i at times d_i) into one
// global schedule; all shuttles run identical trips, so departures within a
// round share the same time.
Schedule interleave(const std::vector<Rat>& x, const std::vector<Rat>& d,
                    long S) {
  Schedule s;
  Rat carried(0);
  for (size_t i = 0; i < x.size(); ++i) {
    for (long k = 0; k < S; ++k) {
      carried += x[i];
      s.loads.push_back(carried);
      s.departures.push_back(d[i]);
    }
  }
  return s;
}

}  // namespace

std::vector<KktCandidate> kkt_candidates(const Rat& per_shuttle_demand,
                                         const Rat& capacity, const Rat& nu,
                                         const Rat& pi) {
  if (pi <= 0) throw PreconditionError("kkt_candidates: pi must be positive");
  const Rat& Ds = per_shuttle_demand;
  const Rat& C = capacity;
  std::vector<KktCandidate> out;

  if (nu == 0) {
    // Linear objective: front-load at full capacity.
    long a = static_cast<long>(rat_floor(Ds / C));
    Rat rem = Ds - Rat(a) * C;
    KktCandidate cand;
    cand.full_count = a;
    cand.loads.assign(a, C);
    if (rem > 0) cand.loads.push_back(rem);
    cand.last_nonzero = static_cast<long>(cand.loads.size());
    cand.objective = candidate_objective(cand.loads, nu, pi);
    out.push_back(std::move(cand));
    return out;
  }

  long a_max = static_cast<long>(rat_floor(Ds / C));
  for (long a = 0; a <= a_max; ++a) {
    Rat rem = Ds - Rat(a) * C;
    KktCandidate cand;
    cand.full_count = a;
    cand.loads.assign(a, C);
    if (rem == 0) {
      cand.last_nonzero = a;
    } else {
      // Unique k >= 1 with k(k-1) < (2 nu / pi) rem <= k(k+1); the middle
      // block then spans indices a+1 .. a+k with mean rem/k and slope -pi/nu.
      Rat q = 2 * nu * rem / pi;
      BigInt k0 = sqrt(rat_ceil(q));
      long k = -1;
      for (BigInt c = std::max(BigInt(1), k0 - 2); c <= k0 + 2; ++c) {
        if (Rat(c * (c - 1)) < q && q <= Rat(c * (c + 1))) {
          k = static_cast<long>(c);
          break;
        }
      }
      if (k < 0) continue;  // no admissible block length for this a
      cand.last_nonzero = a + k;
      Rat mean = rem / Rat(k);
      Rat slope = pi / nu;
      bool ok = true;
      for (long j = a + 1; j <= a + k; ++j) {
        Rat xj = mean + slope * (Rat(a + k + 1) / 2 - Rat(j));
        if (xj < 0 || xj > C) {
          ok = false;
          break;
        }
        cand.loads.push_back(xj);
      }
      if (!ok) continue;
    }
    cand.objective = candidate_objective(cand.loads, nu, pi);
    out.push_back(std::move(cand));
  }
  return out;
}

SolveReport solve_noreturn_constant(const Instance& inst) {
  require_constant(inst, "solve_noreturn_constant");
  const Rat& D = inst.demand.total();
  const long S = inst.fleet_size;
  if (inst.capacity * Rat(S) < D)
    throw InfeasibleError("solve_noreturn_constant: CS < D(T)");
  SolveReport rep;
  Rat value = inst.load_rate * D / Rat(S);
  for (long j = 1; j <= S; ++j) {
    rep.schedule.loads.push_back(D * Rat(j) / Rat(S));
    rep.schedule.departures.push_back(value);
  }
  rep.lower_bound = value;
  rep.upper_bound = value;
  return rep;
}

SolveReport solve_return_max_constant(const Instance& inst) {
  require_constant(inst, "solve_return_max_constant");
  const Rat& D = inst.demand.total();
  const long S = inst.fleet_size;
  Rat Ds = D / Rat(S);
  long trips = static_cast<long>(rat_ceil(D / (inst.capacity * Rat(S))));
  // Full loads on every round except the last.
  std::vector<Rat> x(trips, inst.capacity);
  x.back() = Ds - inst.capacity * Rat(trips - 1);
  std::vector<Rat> d(trips);
  Rat cum(0);
  for (long i = 0; i < trips; ++i) {
    cum += inst.load_rate * x[i];
    d[i] = cum + inst.return_time * Rat(i);
  }
  SolveReport rep;
  rep.schedule = interleave(x, d, S);
  rep.lower_bound = inst.load_rate * Ds + Rat(trips - 1) * inst.return_time;
  rep.upper_bound = rep.lower_bound;
  return rep;
}

SolveReport solve_return_ave_constant(const Instance& inst) {
  require_constant(inst, "solve_return_ave_constant");
  const Rat& D = inst.demand.total();
  const long S = inst.fleet_size;
  Rat Ds = D / Rat(S);
  SolveReport rep;
  if (inst.return_time == 0) {
    // Infimum nu D / (2S); not attained when nu > 0.
    rep.lower_bound = inst.load_rate * D / (2 * Rat(S));
    rep.upper_bound = rep.lower_bound;
    rep.no_optimal_solution = true;
    return rep;
  }
  auto cands = kkt_candidates(Ds, inst.capacity, inst.load_rate, inst.return_time);
  if (cands.empty())
    throw PreconditionError("solve_return_ave_constant: no admissible candidate");
  const KktCandidate* best = &cands.front();
  for (const auto& c : cands)
    if (c.objective < best->objective) best = &c;
  rep.stats.enumerated = static_cast<long>(cands.size());

  std::vector<Rat> d(best->loads.size());
  Rat cum(0);
  for (size_t i = 0; i < best->loads.size(); ++i) {
    cum += best->loads[i];
    d[i] = Rat(static_cast<long>(i)) * inst.return_time + inst.load_rate * cum;
  }
  rep.schedule = interleave(best->loads, d, S);
  Rat value = Rat(S) / D * (best->objective + inst.load_rate * Ds * Ds / 2);
  rep.lower_bound = value;
  rep.upper_bound = value;
  return rep;
}

}  // namespace shuttle
