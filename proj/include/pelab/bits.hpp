#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pelab/bigint.hpp"
#include "pelab/rng.hpp"

namespace pelab {

// Bit strings with index 0 as the leftmost / most-significant bit.
// That convention (x1 = leftmost) is used everywhere: tree segments,
// MSB/LSB splits of the chain labelling, state-vector indexing.
using Bits = std::vector<std::uint8_t>;

Bits bits_from_u64(std::uint64_t value, int width);
std::uint64_t bits_to_u64(const Bits& b);  // width <= 64
Bits bits_from_big(const num::BigUint& value, int width);
num::BigUint bits_to_big(const Bits& b);
Bits bits_concat(const Bits& a, const Bits& b);
Bits bits_slice(const Bits& b, int from, int len);
Bits random_bits(int width, num::SeededRng& rng);
std::string bits_to_string(const Bits& b);   // e.g. "01101"
Bits bits_from_string(const std::string& s);

}  // namespace pelab
