#pragma once

#include <vector>

#include "pelab/bits.hpp"
#include "pelab/gf2.hpp"
#include "pelab/rng.hpp"

namespace pelab::hashfam {

// r-wise independent family via degree-(r-1) polynomials over GF(2^w),
// w = max(in_bits, out_bits). Inputs embed by zero-extension (high bits
// zero), outputs keep the low out_bits. Key length is exactly
// r * max(in_bits, out_bits) bits.
struct RwiseKey {
  int r = 0;
  int in_bits = 0;
  int out_bits = 0;
  std::vector<gf::Elt> coeffs;  // exactly r, coeffs[i] multiplies x^i

  int field_bits() const { return in_bits > out_bits ? in_bits : out_bits; }
  std::size_t key_bits() const { return std::size_t(r) * std::size_t(field_bits()); }
};

RwiseKey sample_rwise_key(int r, int in_bits, int out_bits, num::SeededRng& rng);

Bits eval_rwise(const RwiseKey& key, const Bits& x);

// Convenience for narrow inputs/outputs.
std::uint64_t eval_rwise_u64(const RwiseKey& key, std::uint64_t x);

}  // namespace pelab::hashfam
