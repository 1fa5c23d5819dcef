#include "shuttlesched/solver_noreturn_ave.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <vector>

namespace shuttle {
namespace noreturn_ave {

Rat f_ave(const DemandCurve& curve, const Rat& d, const Rat& y, const Rat& y2) {
  if (y > y2) throw DomainError("f_ave: y > y2");
  return d * (y2 - y) - curve.integrate_bar_tau(y, y2);
}

namespace {

struct Preconditions {
  long R;
  Rat eta;
  Rat alpha;
  Rat gamma;
};

Preconditions check(const Instance& inst, long M) {
  if (M < 1) throw PreconditionError("noreturn_ave: M must be positive");
  if (!inst.demand.strictly_increasing() || !inst.demand.min_slope() ||
      *inst.demand.min_slope() <= 0)
    throw PreconditionError(
        "noreturn_ave: demand must be increasing with positive minimum slope");
  const Rat& D = inst.demand.total();
  if (inst.capacity * Rat(inst.fleet_size) < D)
    throw InfeasibleError("noreturn_ave: CS < D(T)");
  Preconditions p;
  p.eta = inst.capacity / Rat(M);
  if (p.eta >= D)
    throw PreconditionError("noreturn_ave: eta >= D(T); increase M");
  p.R = static_cast<long>(rat_floor(D * Rat(M) / inst.capacity));
  p.alpha = *inst.demand.min_slope();
  p.gamma = 2 * (1 / p.alpha + 2 * inst.load_rate);
  return p;
}

// Position of the layered DP: grid indices are multiples of eta, vertex
// (zi, ri) with zi in 1..M, ri in 1..R; index 0 encodes the start (0, 0).
struct PathNode {
  long zi, ri;
};

template <typename Num>
struct DpOutcome {
  bool found = false;
  Num weight{};
  std::vector<PathNode> path;
  long arcs = 0;
};

// dist[k][v] = min weight over paths of exactly k arcs from the start.
// Admissible predecessors of (zi', ri') form a zi-prefix, so each layer is
// O(M R) using prefix minima over zi at fixed r.
template <typename Num, typename Tables>
DpOutcome<Num> run_dp(long S, long M, long R, const Tables& tb) {
  const long V = M * R;
  auto id = [R](long zi, long ri) { return (zi - 1) * R + ri - 1; };

  std::vector<Num> cur(V), next(V);
  std::vector<char> cur_ok(V, 0), next_ok(V, 0);
  std::vector<int16_t> pred(static_cast<size_t>(S) * V, -1);

  // prefix minima over zi for fixed ri of the current layer
  std::vector<Num> pmin(V);
  std::vector<int16_t> parg(V);

  DpOutcome<Num> out;
  long best_layer = -1, best_z = -1;

  for (long zi = 1; zi <= std::min(M, R); ++zi) {
    long v = id(zi, zi);
    cur[v] = tb.weight(zi, zi, 0);
    cur_ok[v] = 1;
    pred[v] = 0;
    ++out.arcs;
  }
  for (long ri2 = 2; ri2 <= R; ++ri2)
    for (long zi2 = 1; zi2 <= std::min<long>(M, ri2 - 1); ++zi2)
      out.arcs += std::max<long>(0, tb.pred_prefix(zi2, ri2, ri2 - zi2, M));

  for (long layer = 1; layer <= S; ++layer) {
    // Harvest finished paths at r = R eta.
    for (long zi = 1; zi <= M; ++zi) {
      long v = id(zi, R);
      if (cur_ok[v] && (!out.found || cur[v] < out.weight)) {
        out.found = true;
        out.weight = cur[v];
        best_layer = layer;
        best_z = zi;
      }
    }
    if (layer == S) break;

    for (long ri = 1; ri <= R; ++ri) {
      bool any = false;
      Num run{};
      int16_t arg = -1;
      for (long zi = 1; zi <= M; ++zi) {
        long v = id(zi, ri);
        if (cur_ok[v] && (!any || cur[v] < run)) {
          any = true;
          run = cur[v];
          arg = static_cast<int16_t>(zi);
        }
        pmin[v] = run;
        parg[v] = any ? arg : int16_t(-1);
      }
    }

    std::fill(next_ok.begin(), next_ok.end(), 0);
    for (long ri2 = 2; ri2 <= R; ++ri2) {
      for (long zi2 = 1; zi2 <= std::min<long>(M, ri2 - 1); ++zi2) {
        long ri = ri2 - zi2;
        long zmax = tb.pred_prefix(zi2, ri2, ri, M);
        if (zmax < 1) continue;
        long pv = id(zmax, ri);
        if (parg[pv] < 0) continue;
        Num w = tb.weight(zi2, ri2, ri);
        Num cand = pmin[pv] + w;
        long v = id(zi2, ri2);
        if (!next_ok[v] || cand < next[v]) {
          next_ok[v] = 1;
          next[v] = cand;
          pred[static_cast<size_t>(layer) * V + v] = parg[pv];
        }
      }
    }
    std::swap(cur, next);
    std::swap(cur_ok, next_ok);
  }

  if (!out.found) return out;
  out.path.resize(best_layer);
  long zi = best_z, ri = R;
  for (long k = best_layer; k >= 1; --k) {
    out.path[k - 1] = {zi, ri};
    long p = pred[static_cast<size_t>(k - 1) * V + id(zi, ri)];
    ri -= zi;
    zi = p;
  }
  return out;
}

struct RatTables {
  const std::vector<Rat>* bar;  // bar_tau(i * eta), i = 0..R
  const std::vector<Rat>* integ;  // int_0^{i eta} bar_tau, i = 0..R
  Rat eta, nu, half_gamma_eta;

  Rat weight(long zi2, long ri2, long ri) const {
    return ((*bar)[ri2] + nu * Rat(zi2 - 1) * eta) * Rat(ri2 - ri - 1) * eta -
           ((*integ)[ri2] - (*integ)[ri + 1]);
  }
  // Largest admissible predecessor zi (a prefix 1..zmax), or 0 if none.
  long pred_prefix(long zi2, long ri2, long ri, long M) const {
    Rat room = (*bar)[ri2] - (*bar)[ri] + nu * Rat(zi2) * eta + half_gamma_eta;
    if (nu == 0) return room >= 0 ? M : 0;
    return std::min<long>(M, static_cast<long>(rat_floor(room / (nu * eta))));
  }
};

struct DoubleTables {
  std::vector<double> bar, integ;
  double eta, nu, half_gamma_eta;
  static constexpr double kSlack = 1e-12;

  double weight(long zi2, long ri2, long ri) const {
    return (bar[ri2] + nu * (zi2 - 1) * eta) * ((ri2 - ri - 1) * eta) -
           (integ[ri2] - integ[ri + 1]);
  }
  long pred_prefix(long zi2, long ri2, long ri, long M) const {
    double room = bar[ri2] - bar[ri] + nu * zi2 * eta + half_gamma_eta + kSlack;
    if (nu == 0) return room >= 0 ? M : 0;
    return std::min<long>(M, static_cast<long>(std::floor(room / (nu * eta))));
  }
};

// Rebuild the schedule from a path: y_j chases r_j + eta under the capacity
// and D(T) caps, departures carry the j*gamma*eta safety shift.
SolveReport reconstruct(const Instance& inst, const Preconditions& pre,
                        const std::vector<PathNode>& path, long arcs) {
  const Rat& D = inst.demand.total();
  const long S = inst.fleet_size;
  const long n = static_cast<long>(path.size());
  SolveReport rep;
  std::vector<Rat>& y = rep.schedule.loads;
  std::vector<Rat>& d = rep.schedule.departures;
  y.resize(S);
  d.resize(S);
  Rat prev(0);
  for (long j = 0; j < n; ++j) {
    Rat r = Rat(path[j].ri) * pre.eta;
    y[j] = std::min(r + pre.eta, std::min(prev + inst.capacity, D));
    d[j] = inst.demand.bar_tau(y[j]) + inst.load_rate * (y[j] - prev) +
           Rat(j + 1) * pre.gamma * pre.eta;
    prev = y[j];
  }
  if (n == S && y[S - 1] != D)
    throw InfeasibleError("noreturn_ave: reconstruction missed D(T)");
  if (n < S) {
    Rat tail_d = std::max(d[n - 1], inst.horizon + inst.load_rate * (D - y[n - 1]));
    for (long j = n; j < S; ++j) {
      y[j] = D;
      d[j] = tail_d;
    }
  }
  rep.stats.iterations = S;
  rep.stats.graph_arcs = arcs;
  return rep;
}

}  // namespace

SolveReport solve(const Instance& inst, long M, Mode mode) {
  Preconditions pre = check(inst, M);
  const Rat& D = inst.demand.total();
  const long S = inst.fleet_size;
  const long R = pre.R;

  if (mode == Mode::automatic) {
    double work = static_cast<double>(S) * M * R;
    mode = work <= 4e6 ? Mode::exact : Mode::fast;
  }

  // Query tables at grid multiples of eta; everything else is arithmetic.
  std::vector<Rat> bar(R + 1), integ(R + 1);
  for (long i = 0; i <= R; ++i) {
    Rat yv = Rat(i) * pre.eta;
    bar[i] = inst.demand.bar_tau(yv);
    integ[i] = inst.demand.integrate_bar_tau(Rat(0), yv);
  }

  SolveReport rep;
  if (mode == Mode::exact) {
    RatTables tb{&bar, &integ, pre.eta, inst.load_rate,
                 pre.gamma * pre.eta / 2};
    auto dp = run_dp<Rat>(S, M, R, tb);
    if (!dp.found) throw InfeasibleError("noreturn_ave: no path to R eta");
    rep = reconstruct(inst, pre, dp.path, dp.arcs);
    rep.lower_bound = dp.weight / D;
  } else {
    DoubleTables tb;
    tb.bar.resize(R + 1);
    tb.integ.resize(R + 1);
    for (long i = 0; i <= R; ++i) {
      tb.bar[i] = to_double(bar[i]);
      tb.integ[i] = to_double(integ[i]);
    }
    tb.eta = to_double(pre.eta);
    tb.nu = to_double(inst.load_rate);
    tb.half_gamma_eta = to_double(pre.gamma * pre.eta / 2);
    auto dp = run_dp<double>(S, M, R, tb);
    if (!dp.found) throw InfeasibleError("noreturn_ave: no path to R eta");
    rep = reconstruct(inst, pre, dp.path, dp.arcs);
    // Path selection ran in floating point; pad the certificate downward.
    double w = dp.weight / to_double(D);
    rep.lower_bound = Rat(w) - Rat(1, 1000000000) * (1 + abs(Rat(w)));
  }
  rep.upper_bound = eval_gave(inst, rep.schedule);
  rep.stats.graph_vertices = M * R + 1;
  return rep;
}

Rat gap_bound(const Instance& inst, long M) {
  Preconditions pre = check(inst, M);
  const Rat& D = inst.demand.total();
  Rat Sp1(inst.fleet_size + 1);
  return ((inst.horizon + inst.load_rate * inst.capacity) / D +
          pre.gamma * Sp1) *
             pre.eta +
         pre.gamma * Sp1 * Sp1 * pre.eta * pre.eta / D;
}

void dump_graph(const Instance& inst, long M, std::ostream& out) {
  Preconditions pre = check(inst, M);
  const long R = pre.R;
  std::vector<Rat> bar(R + 1), integ(R + 1);
  for (long i = 0; i <= R; ++i) {
    Rat yv = Rat(i) * pre.eta;
    bar[i] = inst.demand.bar_tau(yv);
    integ[i] = inst.demand.integrate_bar_tau(Rat(0), yv);
  }
  RatTables tb{&bar, &integ, pre.eta, inst.load_rate, pre.gamma * pre.eta / 2};
  out << "z,r,z2,r2,weight\n";
  auto emit = [&](long zi, long ri, long zi2, long ri2) {
    out << to_double(Rat(zi) * pre.eta) << ',' << to_double(Rat(ri) * pre.eta)
        << ',' << to_double(Rat(zi2) * pre.eta) << ','
        << to_double(Rat(ri2) * pre.eta) << ','
        << to_double(tb.weight(zi2, ri2, ri)) << '\n';
  };
  for (long zi2 = 1; zi2 <= std::min(M, R); ++zi2) emit(0, 0, zi2, zi2);
  for (long ri2 = 2; ri2 <= R; ++ri2)
    for (long zi2 = 1; zi2 <= std::min<long>(M, ri2 - 1); ++zi2) {
      long ri = ri2 - zi2;
      long zmax = tb.pred_prefix(zi2, ri2, ri, M);
      for (long zi = 1; zi <= zmax; ++zi) emit(zi, ri, zi2, ri2);
    }
}

}  // namespace noreturn_ave
}  // namespace shuttle
