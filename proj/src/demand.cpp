#include "shuttlesched/demand.hpp"

#include <algorithm>

namespace shuttle {

namespace {

// Affine time-of-value within a rising piece; for step pieces t_lo == t_hi.
Rat piece_time_at(const Rat& v, const Rat& v_lo, const Rat& v_hi,
                  const Rat& t_lo, const Rat& t_hi) {
  if (v_hi == v_lo) return t_lo;
  return t_lo + (v - v_lo) * (t_hi - t_lo) / (v_hi - v_lo);
}

}  // namespace

DemandCurve DemandCurve::constant(Rat total, Rat horizon) {
  if (total <= 0) throw DomainError("constant curve requires D(T) > 0");
  if (horizon <= 0) throw DomainError("horizon must be positive");
  DemandCurve c;
  c.kind_ = CurveKind::constant;
  c.horizon_ = std::move(horizon);
  c.total_ = total;
  c.anchors_ = {{Rat(0), total}};
  c.finalize();
  return c;
}

DemandCurve DemandCurve::step(std::vector<std::pair<Rat, Rat>> anchors,
                              Rat horizon) {
  if (horizon <= 0) throw DomainError("horizon must be positive");
  if (anchors.empty()) throw DomainError("step curve needs at least one jump");
  DemandCurve c;
  c.kind_ = CurveKind::step;
  c.horizon_ = horizon;
  Rat prev_t(-1), prev_v(0);
  for (auto& [t, v] : anchors) {
    if (t < 0 || t > horizon) throw DomainError("jump time outside [0, T]");
    if (t <= prev_t) throw DomainError("jump times must be increasing");
    if (v < prev_v) throw DomainError("cumulative values must be nondecreasing");
    prev_t = t;
    if (v > prev_v) c.anchors_.emplace_back(t, v);  // drop zero-size jumps
    prev_v = v;
  }
  if (c.anchors_.empty() || c.anchors_.back().second <= 0)
    throw DomainError("step curve requires D(T) > 0");
  c.total_ = c.anchors_.back().second;
  c.finalize();
  return c;
}

DemandCurve DemandCurve::piecewise_affine(
    std::vector<std::pair<Rat, Rat>> anchors, Rat horizon) {
  if (horizon <= 0) throw DomainError("horizon must be positive");
  if (anchors.empty()) throw DomainError("curve needs at least one anchor");
  DemandCurve c;
  c.kind_ = CurveKind::piecewise_affine;
  c.horizon_ = horizon;
  Rat prev_t(-1), prev_v(-1);
  for (auto& [t, v] : anchors) {
    if (t < 0 || t > horizon) throw DomainError("anchor time outside [0, T]");
    if (t <= prev_t) throw DomainError("anchor times must be increasing");
    if (v < 0) throw DomainError("cumulative values must be nonnegative");
    if (prev_v >= 0 && v < prev_v)
      throw DomainError("cumulative values must be nondecreasing");
    prev_t = t;
    prev_v = v;
    c.anchors_.emplace_back(t, v);
  }
  // Pad flat to the full horizon so eval is total on [0, T].
  if (c.anchors_.front().first > 0)
    c.anchors_.insert(c.anchors_.begin(), {Rat(0), c.anchors_.front().second});
  if (c.anchors_.back().first < horizon)
    c.anchors_.emplace_back(horizon, c.anchors_.back().second);
  if (c.anchors_.back().second <= 0)
    throw DomainError("curve requires D(T) > 0");
  c.total_ = c.anchors_.back().second;
  c.finalize();
  return c;
}

void DemandCurve::finalize() {
  rising_.clear();
  switch (kind_) {
    case CurveKind::constant:
      rising_.push_back({Rat(0), total_, Rat(0), Rat(0)});
      strictly_increasing_ = false;
      min_slope_ = std::nullopt;
      break;
    case CurveKind::step: {
      Rat prev_v(0);
      for (const auto& [t, v] : anchors_) {
        rising_.push_back({prev_v, v, t, t});
        prev_v = v;
      }
      strictly_increasing_ = false;
      min_slope_ = std::nullopt;
      break;
    }
    case CurveKind::piecewise_affine: {
      // Initial value D(0) > 0 behaves like a batch present at t = 0.
      if (anchors_.front().second > 0)
        rising_.push_back({Rat(0), anchors_.front().second, Rat(0), Rat(0)});
      bool increasing = anchors_.size() >= 2;
      std::optional<Rat> slope_min;
      for (size_t i = 1; i < anchors_.size(); ++i) {
        const auto& [t0, v0] = anchors_[i - 1];
        const auto& [t1, v1] = anchors_[i];
        Rat slope = (v1 - v0) / (t1 - t0);
        if (!slope_min || slope < *slope_min) slope_min = slope;
        if (v1 > v0)
          rising_.push_back({v0, v1, t0, t1});
        else
          increasing = false;
      }
      strictly_increasing_ = increasing;
      min_slope_ = slope_min;
      break;
    }
  }
}

Rat DemandCurve::eval(const Rat& t) const {
  if (t < 0) throw DomainError("eval: t < 0");
  if (t >= horizon_) return total_;  // D(t) = D(T) for t >= T
  switch (kind_) {
    case CurveKind::constant:
      return total_;
    case CurveKind::step: {
      // Post-jump value holds at the jump time (upper semicontinuity).
      Rat value(0);
      for (const auto& [tk, vk] : anchors_) {
        if (tk <= t)
          value = vk;
        else
          break;
      }
      return value;
    }
    case CurveKind::piecewise_affine: {
      auto it = std::upper_bound(
          anchors_.begin(), anchors_.end(), t,
          [](const Rat& x, const auto& a) { return x < a.first; });
      // anchors_ covers [0, T], so it is neither begin nor end here.
      const auto& [t1, v1] = *it;
      const auto& [t0, v0] = *(it - 1);
      return v0 + (t - t0) * (v1 - v0) / (t1 - t0);
    }
  }
  return total_;
}

Rat DemandCurve::tau(const Rat& y) const {
  if (y < 0 || y > total_) throw DomainError("tau: y outside [0, D(T)]");
  if (y == total_) return horizon_;
  // First rising piece whose top value exceeds y; D(t) <= y strictly before
  // the interpolated point, > y after it.
  for (const auto& p : rising_) {
    if (p.v_hi > y) {
      Rat v = y < p.v_lo ? p.v_lo : y;
      return piece_time_at(v, p.v_lo, p.v_hi, p.t_lo, p.t_hi);
    }
  }
  return horizon_;
}

Rat DemandCurve::bar_tau(const Rat& y) const {
  if (y < 0) throw DomainError("bar_tau: y < 0");
  if (y == 0) return Rat(0);
  if (y > total_) return horizon_;  // extension used by the graph solvers
  for (const auto& p : rising_) {
    if (p.v_hi >= y) {
      Rat v = y < p.v_lo ? p.v_lo : y;
      return piece_time_at(v, p.v_lo, p.v_hi, p.t_lo, p.t_hi);
    }
  }
  return horizon_;
}

Rat DemandCurve::integrate_bar_tau(const Rat& y1, const Rat& y2) const {
  if (y1 < 0 || y1 > y2) throw DomainError("integrate_bar_tau: bad interval");
  Rat acc(0);
  for (const auto& p : rising_) {
    Rat a = std::max(y1, p.v_lo);
    Rat b = std::min(y2, p.v_hi);
    if (a >= b) continue;
    Rat ta = piece_time_at(a, p.v_lo, p.v_hi, p.t_lo, p.t_hi);
    Rat tb = piece_time_at(b, p.v_lo, p.v_hi, p.t_lo, p.t_hi);
    acc += (ta + tb) * (b - a) / 2;
  }
  if (y2 > total_) acc += horizon_ * (y2 - std::max(y1, total_));
  return acc;
}

Rat DemandCurve::sup_feasible_load(const Rat& y_prev, const Rat& h,
                                   const Rat& nu, const Rat& cap) const {
  if (y_prev < 0 || y_prev > total_)
    throw DomainError("sup_feasible_load: y_prev outside [0, D(T)]");
  if (h < 0) throw DomainError("sup_feasible_load: h < 0");
  Rat top = std::min(y_prev + cap, total_);
  // phi(y) = bar_tau(y) + nu*y is nondecreasing and lower semicontinuous, so
  // {phi <= beta} is a closed initial interval and the sup below is attained.
  Rat beta = h + tau(y_prev) + nu * y_prev;
  if (bar_tau(top) + nu * top <= beta) return top;
  Rat best(0);
  for (const auto& p : rising_) {
    if (p.v_lo >= top) break;
    Rat hi = std::min(p.v_hi, top);
    Rat t_hi = piece_time_at(hi, p.v_lo, p.v_hi, p.t_lo, p.t_hi);
    if (t_hi + nu * hi <= beta) {
      best = hi;
      continue;
    }
    // Solve t(v) + nu*v <= beta inside (v_lo, hi].
    if (p.v_hi == p.v_lo) break;  // defensive; rising pieces have v_hi > v_lo
    Rat slope = (p.t_hi - p.t_lo) / (p.v_hi - p.v_lo);
    Rat denom = slope + nu;
    if (denom == 0) break;  // flat phi above beta everywhere in the piece
    Rat v = (beta - p.t_lo + slope * p.v_lo) / denom;
    if (v > p.v_lo) best = std::max(best, std::min(v, hi));
    break;
  }
  return std::max(best, y_prev);
}

DemandCurveF::DemandCurveF(const DemandCurve& c) {
  total_ = to_double(c.total());
  horizon_ = to_double(c.horizon());
  // Rebuild the rising pieces in double precision from the public anchors.
  std::vector<std::pair<double, double>> pts;
  pts.reserve(c.anchors().size());
  for (const auto& [t, v] : c.anchors())
    pts.emplace_back(to_double(t), to_double(v));
  switch (c.kind()) {
    case CurveKind::constant:
      rising_.push_back({0.0, total_, 0.0, 0.0});
      break;
    case CurveKind::step: {
      double prev_v = 0.0;
      for (auto& [t, v] : pts) {
        rising_.push_back({prev_v, v, t, t});
        prev_v = v;
      }
      break;
    }
    case CurveKind::piecewise_affine: {
      if (pts.front().second > 0)
        rising_.push_back({0.0, pts.front().second, 0.0, 0.0});
      for (size_t i = 1; i < pts.size(); ++i)
        if (pts[i].second > pts[i - 1].second)
          rising_.push_back({pts[i - 1].second, pts[i].second,
                             pts[i - 1].first, pts[i].first});
      break;
    }
  }
}

double DemandCurveF::bar_tau(double y) const {
  if (y <= 0) return 0.0;
  if (y > total_) return horizon_;
  auto it = std::lower_bound(
      rising_.begin(), rising_.end(), y,
      [](const Piece& p, double v) { return p.v_hi < v; });
  if (it == rising_.end()) return horizon_;
  double v = std::max(y, it->v_lo);
  if (it->v_hi == it->v_lo) return it->t_lo;
  return it->t_lo + (v - it->v_lo) * (it->t_hi - it->t_lo) / (it->v_hi - it->v_lo);
}

double DemandCurveF::tau(double y) const {
  if (y >= total_) return horizon_;
  auto it = std::upper_bound(
      rising_.begin(), rising_.end(), y,
      [](double v, const Piece& p) { return v < p.v_hi; });
  if (it == rising_.end()) return horizon_;
  double v = std::max(y, it->v_lo);
  if (it->v_hi == it->v_lo) return it->t_lo;
  return it->t_lo + (v - it->v_lo) * (it->t_hi - it->t_lo) / (it->v_hi - it->v_lo);
}

double DemandCurveF::integrate_bar_tau(double y1, double y2) const {
  double acc = 0;
  for (const auto& p : rising_) {
    double a = std::max(y1, p.v_lo);
    double b = std::min(y2, p.v_hi);
    if (a >= b) continue;
    double ta = p.v_hi == p.v_lo
                    ? p.t_lo
                    : p.t_lo + (a - p.v_lo) * (p.t_hi - p.t_lo) / (p.v_hi - p.v_lo);
    double tb = p.v_hi == p.v_lo
                    ? p.t_lo
                    : p.t_lo + (b - p.v_lo) * (p.t_hi - p.t_lo) / (p.v_hi - p.v_lo);
    acc += 0.5 * (ta + tb) * (b - a);
  }
  if (y2 > total_) acc += horizon_ * (y2 - std::max(y1, total_));
  return acc;
}

}  // namespace shuttle
