#pragma once

#include <string>

#include "shuttlesched/demand.hpp"
#include "shuttlesched/errors.hpp"
#include "shuttlesched/rational.hpp"

namespace shuttle {

enum class Variant { noreturn_max, noreturn_ave, return_max, return_ave_constant };

std::string variant_name(Variant v);
Variant variant_from_name(const std::string& name);

// Problem parameters. The demand horizon and T must agree.
struct Instance {
  Rat capacity;     // C, users per shuttle
  Rat horizon;      // T, minutes
  Rat load_rate;    // nu, minutes per user
  Rat return_time;  // pi, minutes
  long fleet_size;  // S
  DemandCurve demand;
  Variant variant = Variant::noreturn_max;

  Instance(Rat C, Rat T, Rat nu, Rat pi, long S, DemandCurve d, Variant v)
      : capacity(std::move(C)),
        horizon(std::move(T)),
        load_rate(std::move(nu)),
        return_time(std::move(pi)),
        fleet_size(S),
        demand(std::move(d)),
        variant(v) {
    if (capacity <= 0) throw DomainError("instance: C must be positive");
    if (horizon <= 0) throw DomainError("instance: T must be positive");
    if (load_rate < 0) throw DomainError("instance: nu must be nonnegative");
    if (return_time < 0) throw DomainError("instance: pi must be nonnegative");
    if (fleet_size < 1) throw DomainError("instance: S must be at least 1");
    if (demand.horizon() != horizon)
      throw DomainError("instance: demand horizon differs from T");
  }
};

}  // namespace shuttle
