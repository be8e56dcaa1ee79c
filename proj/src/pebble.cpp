#include "pelab/pebble.hpp"

#include <cstdint>
#include <queue>
#include <unordered_map>

namespace pelab::tm {

bool pebble_valid(const PebbleSchedule& schedule, int t, int pebbles) {
  if (t < 1) return false;
  std::uint64_t state = 0;
  int count = 0;
  for (const auto& mv : schedule) {
    if (mv.index < 1 || mv.index > t) return false;
    std::uint64_t bit = std::uint64_t(1) << (mv.index - 1);
    bool present = state & bit;
    bool support = mv.index == 1 || (state & (bit >> 1));
    if (!support) return false;
    if (mv.place) {
      if (present) return false;
      if (count + 1 > pebbles) return false;
      state |= bit;
      ++count;
    } else {
      if (!present) return false;
      state &= ~bit;
      --count;
    }
  }
  return state == (std::uint64_t(1) << (t - 1));
}

namespace {

PebbleSchedule bfs_schedule(int t, int pebbles) {
  std::uint64_t goal = std::uint64_t(1) << (t - 1);
  std::unordered_map<std::uint64_t, std::uint64_t> parent;  // state -> predecessor
  std::unordered_map<std::uint64_t, PebbleMove> how;
  std::queue<std::uint64_t> q;
  parent[0] = 0;
  q.push(0);
  while (!q.empty()) {
    std::uint64_t s = q.front();
    q.pop();
    if (s == goal) break;
    int count = __builtin_popcountll(s);
    for (int i = 1; i <= t; ++i) {
      std::uint64_t bit = std::uint64_t(1) << (i - 1);
      bool support = i == 1 || (s & (bit >> 1));
      if (!support) continue;
      bool present = s & bit;
      if (!present && count >= pebbles) continue;
      std::uint64_t next = s ^ bit;
      if (parent.count(next)) continue;
      parent[next] = s;
      how[next] = PebbleMove{!present, i};
      q.push(next);
    }
  }
  if (!parent.count(goal)) throw InfeasibleError("pebble_schedule: budget too small");
  PebbleSchedule out;
  for (std::uint64_t s = goal; s != 0; s = parent[s]) out.push_back(how[s]);
  std::reverse(out.begin(), out.end());
  return out;
}

// classic halving strategy: B(lo, hi) pebbles hi given support below lo and
// leaves only hi pebbled in lo..hi
void bennett(int lo, int hi, PebbleSchedule* out) {
  if (lo == hi) {
    out->push_back({true, lo});
    return;
  }
  int mid = (lo + hi) / 2;
  bennett(lo, mid, out);
  bennett(mid + 1, hi, out);
  PebbleSchedule left;
  bennett(lo, mid, &left);
  for (auto it = left.rbegin(); it != left.rend(); ++it) out->push_back({!it->place, it->index});
}

}  // namespace

PebbleSchedule pebble_schedule(int t, int pebbles) {
  if (t < 1) throw std::domain_error("pebble_schedule: T must be >= 1");
  if (pebbles < 1) throw std::domain_error("pebble_schedule: budget must be >= 1");
  if (t >= 63 || (std::uint64_t(1) << pebbles) - 1 < std::uint64_t(t))
    throw InfeasibleError("pebble_schedule: T > 2^pebbles - 1 is unreachable");
  if (t <= 20) return bfs_schedule(t, pebbles);
  PebbleSchedule out;
  bennett(1, t, &out);
  if (!pebble_valid(out, t, pebbles))
    throw InfeasibleError("pebble_schedule: strategy exceeded the budget");
  return out;
}

}  // namespace pelab::tm
