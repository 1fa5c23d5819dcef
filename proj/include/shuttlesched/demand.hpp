#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "shuttlesched/errors.hpp"
#include "shuttlesched/rational.hpp"

namespace shuttle {

enum class CurveKind { constant, step, piecewise_affine };

// Cumulative arrival curve D on [0, T]: nondecreasing, upper semicontinuous,
// D(T) > 0. Three families: constant (everyone present at t = 0), step
// (finitely many batch arrivals, post-jump value attained at the jump time),
// and piecewise affine (linear interpolation between anchors).
//
// All queries are exact over rationals. Evaluation is clamped to D(T) for
// t > T, and bar_tau is extended with bar_tau(y) = T for y > D(T); both
// extensions are needed by the graph solvers.
class DemandCurve {
 public:
  // anchors: (time, cumulative value) pairs, time strictly increasing.
  //  - step: value is the post-jump cumulative total at that instant;
  //    D is 0 before the first anchor.
  //  - piecewise_affine: interpolation nodes; the curve is padded flat to
  //    t = 0 and t = T when the anchors do not cover the full horizon.
  static DemandCurve constant(Rat total, Rat horizon);
  static DemandCurve step(std::vector<std::pair<Rat, Rat>> anchors, Rat horizon);
  static DemandCurve piecewise_affine(std::vector<std::pair<Rat, Rat>> anchors,
                                      Rat horizon);

  CurveKind kind() const { return kind_; }
  const Rat& horizon() const { return horizon_; }
  const Rat& total() const { return total_; }  // D(T)
  const std::vector<std::pair<Rat, Rat>>& anchors() const { return anchors_; }

  // True iff D is increasing on [0, T] (piecewise affine, all slopes > 0).
  // Callers gate Lemma-3-style tau == bar_tau reasoning on this flag.
  bool strictly_increasing() const { return strictly_increasing_; }

  // inf of the right derivative, defined for piecewise affine curves only.
  std::optional<Rat> min_slope() const { return min_slope_; }

  // D(t). t < 0 is a domain error; t > T evaluates to D(T).
  Rat eval(const Rat& t) const;

  // tau(y) = inf{t : D(t) > y}, with tau(D(T)) = T. Domain [0, D(T)].
  Rat tau(const Rat& y) const;

  // bar_tau(y) = inf{t : D(t) >= y}. Domain y >= 0; returns T above D(T).
  Rat bar_tau(const Rat& y) const;

  // Integral of bar_tau over [y1, y2], exact. Uses the bar_tau extension
  // above D(T). Requires 0 <= y1 <= y2.
  Rat integrate_bar_tau(const Rat& y1, const Rat& y2) const;

  // max{y : y <= y_prev + cap, y <= D(T),
  //         bar_tau(y) + nu*(y - y_prev) - tau(y_prev) <= h}.
  // The set is closed and contains y_prev, so the max exists and is >= y_prev.
  Rat sup_feasible_load(const Rat& y_prev, const Rat& h, const Rat& nu,
                        const Rat& cap) const;

 private:
  DemandCurve() = default;
  void finalize();

  CurveKind kind_ = CurveKind::constant;
  Rat horizon_;
  Rat total_;
  std::vector<std::pair<Rat, Rat>> anchors_;
  bool strictly_increasing_ = false;
  std::optional<Rat> min_slope_;

  // Maximal rising pieces of the curve in value space; bar_tau restricted to
  // values in (v_lo, v_hi] is affine from the piece. For step curves the
  // piece is the jump at time t_lo == t_hi.
  struct RisingPiece {
    Rat v_lo, v_hi;
    Rat t_lo, t_hi;
  };
  std::vector<RisingPiece> rising_;
};

// Double-precision view of a curve for the large-instance fast paths. Same
// query semantics as DemandCurve, evaluated in floating point.
class DemandCurveF {
 public:
  explicit DemandCurveF(const DemandCurve& c);

  double total() const { return total_; }
  double horizon() const { return horizon_; }
  double bar_tau(double y) const;
  double tau(double y) const;
  double integrate_bar_tau(double y1, double y2) const;

 private:
  struct Piece {
    double v_lo, v_hi, t_lo, t_hi;
  };
  std::vector<Piece> rising_;
  double total_ = 0;
  double horizon_ = 0;
};

}  // namespace shuttle
