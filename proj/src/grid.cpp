#include "pelab/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pelab::grid {

std::pair<int, int> snake_coords(int i, int side) {
  if (side < 1 || i < 0 || i >= side * side) throw std::domain_error("snake_coords: out of range");
  int row = i / side;
  int col = i % side;
  if (row % 2 == 1) col = side - 1 - col;
  return {row, col};
}

int GridBipartition::count_a() const {
  int c = 0;
  for (auto v : in_a) c += v ? 1 : 0;
  return c;
}

int area(const GridBipartition& bp) {
  int side = bp.side, count = 0;
  for (int r = 0; r < side; ++r) {
    for (int c = 0; c < side; ++c) {
      if (!bp.at(r, c)) continue;
      bool boundary = (r > 0 && !bp.at(r - 1, c)) || (r + 1 < side && !bp.at(r + 1, c)) ||
                      (c > 0 && !bp.at(r, c - 1)) || (c + 1 < side && !bp.at(r, c + 1));
      if (boundary) ++count;
    }
  }
  return count;
}

GridBipartition random_bipartition(int side, num::SeededRng& rng) {
  if (side < 2) throw std::domain_error("random_bipartition: side must be >= 2");
  int n = side * side;
  GridBipartition bp;
  bp.side = side;
  for (;;) {
    bp.in_a.assign(std::size_t(n), 0);
    if (rng.next_u8() & 1) {
      // site percolation
      double p = 0.25 + 0.5 * rng.next_double();
      for (auto& v : bp.in_a) v = rng.next_double() < p ? 1 : 0;
    } else {
      // random connected blob grown by neighbor accretion
      int target = 1 + int(rng.below(std::uint64_t(n - 1)));
      std::vector<int> frontier{int(rng.below(std::uint64_t(n)))};
      bp.in_a[std::size_t(frontier[0])] = 1;
      int size = 1;
      while (size < target && !frontier.empty()) {
        std::size_t pick = std::size_t(rng.below(frontier.size()));
        int site = frontier[pick];
        int r = site / side, c = site % side;
        std::vector<int> nbs;
        if (r > 0) nbs.push_back(site - side);
        if (r + 1 < side) nbs.push_back(site + side);
        if (c > 0) nbs.push_back(site - 1);
        if (c + 1 < side) nbs.push_back(site + 1);
        std::vector<int> fresh;
        for (int nb : nbs)
          if (!bp.in_a[std::size_t(nb)]) fresh.push_back(nb);
        if (fresh.empty()) {
          frontier.erase(frontier.begin() + long(pick));
          continue;
        }
        int nb = fresh[rng.below(fresh.size())];
        bp.in_a[std::size_t(nb)] = 1;
        frontier.push_back(nb);
        ++size;
      }
    }
    int a = bp.count_a();
    if (a > 0 && a < n) return bp;
  }
}

std::vector<double> subset_entropies(const StateVector& psi) {
  int side = psi.sites;
  if (side > 12) throw RefusalError("subset_entropies: refusing side > 12");
  std::size_t total = std::size_t(1) << side;
  std::vector<double> out(total, 0.0);
  for (std::size_t mask = 1; mask + 1 < total; ++mask) {
    ent::CutSpec cut;
    cut.sites = side;
    cut.mask = std::uint32_t(mask);
    out[mask] = ent::cut_entropy(psi, cut);
  }
  return out;
}

std::vector<double> beta_profile(const StateVector& psi) {
  auto cache = subset_entropies(psi);
  int side = psi.sites;
  std::vector<double> beta(std::size_t(side) + 1, 0.0);
  std::vector<bool> seen(std::size_t(side) + 1, false);
  for (std::size_t mask = 1; mask + 1 < cache.size(); ++mask) {
    int k = __builtin_popcount(unsigned(mask));
    double rate = cache[mask] / double(k);
    if (!seen[std::size_t(k)] || rate < beta[std::size_t(k)]) {
      beta[std::size_t(k)] = rate;
      seen[std::size_t(k)] = true;
    }
  }
  return beta;
}

double grid_entropy(const GridState& gs, const GridBipartition& bp,
                    const std::vector<double>* subset_cache) {
  int side = gs.side;
  if (bp.side != side) throw std::domain_error("grid_entropy: bipartition does not match");
  if (gs.psi.sites != side) throw std::domain_error("grid_entropy: unit state does not match side");
  int a = bp.count_a();
  if (a == 0 || a == side * side) throw std::domain_error("grid_entropy: empty side");
  std::vector<double> local;
  if (!subset_cache) {
    local = subset_entropies(gs.psi);
    subset_cache = &local;
  }
  std::uint32_t full = (std::uint32_t(1) << side) - 1;
  double s0 = 0, s1 = 0;
  for (int r = 0; r < side; ++r) {
    std::uint32_t mask = 0;
    for (int c = 0; c < side; ++c)
      if (bp.at(r, c)) mask |= std::uint32_t(1) << c;  // psi site c+1
    if (mask != 0 && mask != full) s0 += (*subset_cache)[mask];
  }
  for (int c = 0; c < side; ++c) {
    std::uint32_t mask = 0;
    for (int r = 0; r < side; ++r)
      if (bp.at(r, c)) mask |= std::uint32_t(1) << r;  // psi site r+1
    if (mask != 0 && mask != full) s1 += (*subset_cache)[mask];
  }
  // phi0* and phi1* are cutwise orthogonal for every bipartition (the
  // indicator qubits differ on both sides), so the superposition adds one bit.
  return 0.5 * (s0 + s1) + 1.0;
}

StateVector materialize_grid_component(const GridState& gs, int which) {
  int side = gs.side, n = side * side;
  if (side > 3) throw RefusalError("materialize_grid_component: refusing side > 3");
  StateVector out = make_state(n, 4);
  std::size_t patterns = std::size_t(1) << n;
  for (std::size_t x = 0; x < patterns; ++x) {
    // content bit of grid site (r, c), row-major; bit index r*side + c
    auto bit = [&](int r, int c) { return (x >> (std::size_t(r) * side + std::size_t(c))) & 1; };
    std::complex<double> amp = 1.0;
    if (which == 0) {
      for (int r = 0; r < side && amp != 0.0; ++r) {
        std::int64_t idx = 0;
        for (int c = 0; c < side; ++c) idx = (idx << 1) | std::int64_t(bit(r, c));
        amp *= gs.psi.amp[idx];
      }
    } else {
      for (int c = 0; c < side && amp != 0.0; ++c) {
        std::int64_t idx = 0;
        for (int r = 0; r < side; ++r) idx = (idx << 1) | std::int64_t(bit(r, c));
        amp *= gs.psi.amp[idx];
      }
    }
    if (amp == 0.0) continue;
    // global index: site s digit = indicator*2 + content, site 1 most significant
    std::int64_t gidx = 0;
    for (int s = 0; s < n; ++s) {
      int r = s / side, c = s % side;
      int digit = (which == 0 ? 0 : 2) + int(bit(r, c));
      gidx = gidx * 4 + digit;
    }
    out.amp[gidx] = amp;
  }
  return out;
}

StateVector materialize_grid_state(const GridState& gs) {
  StateVector p0 = materialize_grid_component(gs, 0);
  StateVector p1 = materialize_grid_component(gs, 1);
  p0.amp = (p0.amp + p1.amp) / std::sqrt(2.0);
  return p0;
}

ent::CutSpec grid_cut(const GridBipartition& bp) {
  int n = bp.side * bp.side;
  if (n > 32) throw std::domain_error("grid_cut: mask too wide");
  ent::CutSpec cut;
  cut.sites = n;
  for (int s = 0; s < n; ++s)
    if (bp.in_a[std::size_t(s)]) cut.mask |= std::uint32_t(1) << s;
  return cut;
}

LawReport law_check(const GridState& gs, LawMode mode, int samples, num::SeededRng& rng,
                    double c1, double c2) {
  LawReport rep;
  rep.mode = mode;
  rep.samples = samples;
  rep.c1 = c1;
  rep.c2 = c2;
  auto cache = subset_entropies(gs.psi);
  auto beta = beta_profile(gs.psi);
  int side = gs.side, n = side * side;
  double log_side = std::log2(double(side));
  double worst = mode == LawMode::low ? 0.0 : 1e300;
  for (int i = 0; i < samples; ++i) {
    GridBipartition bp = random_bipartition(side, rng);
    double s = grid_entropy(gs, bp, &cache);
    if (mode == LawMode::low) {
      double bound = c1 * double(area(bp)) * log_side * log_side;
      double ratio = s / bound;
      worst = std::max(worst, ratio);
      if (s <= bound) ++rep.passed;
    } else {
      int m = std::min(bp.count_a(), n - bp.count_a());
      int barg = std::clamp(m, 1, side - 1);
      double bound = c2 * beta[std::size_t(barg)] * double(m);
      double ratio = bound > 0 ? s / bound : 1e300;
      worst = std::min(worst, ratio);
      if (s >= bound) ++rep.passed;
    }
  }
  rep.pass_rate = samples > 0 ? double(rep.passed) / samples : 0.0;
  rep.worst_ratio = worst;
  return rep;
}

}  // namespace pelab::grid
