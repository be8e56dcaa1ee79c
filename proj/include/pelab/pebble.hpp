#pragma once

#include <vector>

#include "pelab/errors.hpp"

namespace pelab::tm {

// Bennett pebble game on checkpoints 1..T: a pebble may be placed on or
// removed from checkpoint i only when i == 1 or checkpoint i-1 carries one,
// never exceeding the budget. A schedule computes T when it ends with
// exactly checkpoint T pebbled.
struct PebbleMove {
  bool place = true;
  int index = 0;  // 1..T
};
using PebbleSchedule = std::vector<PebbleMove>;

bool pebble_valid(const PebbleSchedule& schedule, int t, int pebbles);

// Shortest valid schedule. Breadth-first search over pebble sets for small T;
// the classic recursive halving strategy beyond that. Infeasible when
// T > 2^pebbles - 1.
PebbleSchedule pebble_schedule(int t, int pebbles);

}  // namespace pelab::tm
