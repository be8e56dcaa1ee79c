#pragma once

#include <cstdint>
#include <vector>

#include "pelab/entropy.hpp"
#include "pelab/rng.hpp"
#include "pelab/statevec.hpp"

namespace pelab::grid {

// (row, col) of linear index i under the boustrophedon embedding: even rows
// run left to right, odd rows right to left.
std::pair<int, int> snake_coords(int i, int side);

struct GridBipartition {
  int side = 0;
  std::vector<std::uint8_t> in_a;  // row-major side*side, 1 = side A

  bool at(int row, int col) const { return in_a[std::size_t(row) * side + std::size_t(col)]; }
  int count_a() const;
};

// Number of A sites with at least one 4-neighbor in B.
int area(const GridBipartition& bp);

// Site-percolation masks and random connected blobs, both biased away from
// empty sides.
GridBipartition random_bipartition(int side, num::SeededRng& rng);

// The grid state: an equal superposition of sqrt(n) copies of the unit state
// psi laid out horizontally (indicator qubits all 0) and vertically
// (indicator qubits all 1). Each site is indicator qubit x content qubit.
struct GridState {
  int side = 0;
  StateVector psi;  // unit state on `side` qubits
};

// Entropies of psi on every subset of its sites (index = bitmask, bit j =
// site j+1). Subset 0 and the full set give 0.
std::vector<double> subset_entropies(const StateVector& psi);

// beta(k) = min over |A| = k of S(psi_A) / k; beta[0] unused.
std::vector<double> beta_profile(const StateVector& psi);

// Exact entropy of the grid state across the bipartition via the
// row/column decomposition: 1/2 (S0 + S1) + 1, where S0 sums row-restricted
// entropies of psi and S1 column-restricted ones.
double grid_entropy(const GridState& gs, const GridBipartition& bp,
                    const std::vector<double>* subset_cache = nullptr);

// Dense 4^(side^2) state vector of (|phi0*> + |phi1*>)/sqrt(2); side <= 3.
StateVector materialize_grid_state(const GridState& gs);

StateVector materialize_grid_component(const GridState& gs, int which);  // phi0* or phi1*

// Bipartition mask on the materialized state's sites (row-major site order).
ent::CutSpec grid_cut(const GridBipartition& bp);

enum class LawMode { low, high };

struct LawReport {
  LawMode mode;
  int samples = 0;
  int passed = 0;
  double pass_rate = 0;
  double worst_ratio = 0;  // worst observed S / bound (low) or bound / S (high)
  double c1 = 4.0;         // low:  S <= c1 * Area * log2(side)^2
  double c2 = 0.5;         // high: S >= c2 * beta(min) * min(|A|,|B|)
};

LawReport law_check(const GridState& gs, LawMode mode, int samples, num::SeededRng& rng,
                    double c1 = 4.0, double c2 = 0.5);

}  // namespace pelab::grid
