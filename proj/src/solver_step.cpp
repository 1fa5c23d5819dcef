#include "shuttlesched/solver_step.hpp"

#include <algorithm>
#include <optional>

namespace shuttle {
namespace step_dp {

namespace {

void check_preconditions(const Instance& inst, const char* who) {
  if (inst.demand.kind() != CurveKind::step)
    throw PreconditionError(std::string(who) + ": demand must be a step curve");
  if (inst.load_rate != 0)
    throw PreconditionError(std::string(who) + ": requires nu = 0");
  if (inst.capacity * Rat(inst.fleet_size) < inst.demand.total())
    throw InfeasibleError(std::string(who) + ": CS < D(T)");
}

struct Label {
  bool reached = false;
  Rat cost;
  long pred = -1;
};

// Layered DP with exactly S arcs from 0 to D(T). Combine is max for the
// bottleneck objective, + for the sum objective.
SolveReport run_dp(const Instance& inst, bool bottleneck) {
  std::vector<Rat> v = vertex_grid(inst);
  const long n = static_cast<long>(v.size());
  const long S = inst.fleet_size;
  const Rat& D = inst.demand.total();

  std::vector<Rat> tau_of(n), bar_of(n), integral_to(n);
  for (long i = 0; i < n; ++i) {
    tau_of[i] = inst.demand.tau(v[i]);
    bar_of[i] = inst.demand.bar_tau(v[i]);
    integral_to[i] = inst.demand.integrate_bar_tau(Rat(0), v[i]);
  }

  std::vector<Label> cur(n), next(n);
  cur[0].reached = true;
  cur[0].cost = bottleneck ? Rat(-1) : Rat(0);  // neutral; replaced by max()
  bool cur0_empty = true;                       // no arc taken yet
  std::vector<std::vector<long>> preds(S, std::vector<long>(n, -1));

  std::vector<long> first_pred(n);
  long arcs = 0;
  for (long j = 0; j < n; ++j) {
    first_pred[j] = static_cast<long>(
        std::lower_bound(v.begin(), v.end(), v[j] - inst.capacity) - v.begin());
    arcs += j - first_pred[j] + 1;
  }

  for (long layer = 0; layer < S; ++layer) {
    for (auto& l : next) l = Label{};
    for (long j = 0; j < n; ++j) {
      for (long u = first_pred[j]; u <= j; ++u) {
        if (!cur[u].reached) continue;
        Rat w = bottleneck
                    ? bar_of[j] - tau_of[u]
                    : bar_of[j] * (v[j] - v[u]) - (integral_to[j] - integral_to[u]);
        Rat cost;
        if (bottleneck)
          cost = (layer == 0 && cur0_empty) ? w : std::max(cur[u].cost, w);
        else
          cost = cur[u].cost + w;
        if (!next[j].reached || cost < next[j].cost) {
          next[j].reached = true;
          next[j].cost = cost;
          next[j].pred = u;
        }
      }
      preds[layer][j] = next[j].pred;
    }
    std::swap(cur, next);
    cur0_empty = false;
  }
  if (!cur[n - 1].reached)
    throw InfeasibleError("step_dp: no S-arc path to D(T)");

  // Walk predecessors back from D(T).
  std::vector<Rat> loads(S);
  long at = n - 1;
  for (long layer = S - 1; layer >= 0; --layer) {
    loads[layer] = v[at];
    at = preds[layer][at];
  }

  SolveReport rep;
  rep.schedule.loads = loads;
  rep.schedule.departures.reserve(S);
  for (const Rat& y : loads)
    rep.schedule.departures.push_back(inst.demand.bar_tau(y));
  rep.lower_bound = cur[n - 1].cost;
  rep.upper_bound = cur[n - 1].cost;
  rep.stats.graph_vertices = n;
  rep.stats.graph_arcs = arcs;
  rep.stats.iterations = S;
  (void)D;
  return rep;
}

}  // namespace

std::vector<Rat> vertex_grid(const Instance& inst) {
  const Rat& D = inst.demand.total();
  long q_max = static_cast<long>(rat_floor(D / inst.capacity));
  std::vector<Rat> v;
  v.push_back(Rat(0));
  for (const auto& [t, val] : inst.demand.anchors()) {
    for (long q = 0; q <= q_max; ++q) {
      Rat y = val + inst.capacity * Rat(q);
      if (y <= D) v.push_back(y);
    }
  }
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

SolveReport solve_max(const Instance& inst) {
  check_preconditions(inst, "step_dp::solve_max");
  return run_dp(inst, true);
}

SolveReport solve_ave(const Instance& inst) {
  check_preconditions(inst, "step_dp::solve_ave");
  SolveReport rep = run_dp(inst, false);
  rep.lower_bound /= inst.demand.total();
  rep.upper_bound = rep.lower_bound;
  return rep;
}

}  // namespace step_dp
}  // namespace shuttle
