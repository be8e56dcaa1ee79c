#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace pelab::num {

// Deterministic stream generator built on the ChaCha20 block function.
// The same 32-byte seed yields the same byte stream on every platform;
// there is no global RNG state anywhere in the library.
class SeededRng {
 public:
  explicit SeededRng(const std::array<std::uint8_t, 32>& seed);
  // Convenience: expands a 64-bit seed into the 32-byte key.
  explicit SeededRng(std::uint64_t seed);

  std::uint8_t next_u8();
  std::uint32_t next_u32();
  std::uint64_t next_u64();

  // Uniform in [0, bound), bound > 0. Rejection sampled, so exact.
  std::uint64_t below(std::uint64_t bound);

  // Uniform in [0,1) with 53 bits of randomness.
  double next_double();

  std::vector<std::uint8_t> bytes(std::size_t count);

  const std::array<std::uint8_t, 32>& seed() const { return seed_; }
  std::uint64_t counter() const { return counter_; }

 private:
  void refill();

  std::array<std::uint8_t, 32> seed_;
  std::uint64_t counter_ = 0;  // ChaCha block counter
  std::array<std::uint8_t, 64> block_{};
  std::size_t pos_ = 64;
};

}  // namespace pelab::num
