#pragma once

#include <cstdint>
#include <vector>

#include "pelab/rng.hpp"

namespace pelab::num {

// Discretized Gaussian on the integers, mass proportional to exp(-x^2 / (2 sigma^2)),
// truncated to |x| <= ceil(10 sigma) (tail mass < 1e-21, and the cut makes
// sampling terminate deterministically).
struct DiscreteGaussian {
  explicit DiscreteGaussian(double sigma);

  // signed draw in [-support, support]
  std::int64_t sample_signed(SeededRng& rng) const;

  // draw reduced into [0, q)
  std::uint64_t sample_mod(std::uint64_t q, SeededRng& rng) const;

  // exact normalized mass at x (for goodness-of-fit oracles)
  double mass(std::int64_t x) const;

  std::int64_t support() const { return support_; }

 private:
  double sigma_;
  std::int64_t support_;
  std::vector<double> cdf_;  // cumulative over x = -support..support
};

std::uint64_t sample_discrete_gaussian(double sigma, std::uint64_t q, SeededRng& rng);

}  // namespace pelab::num
