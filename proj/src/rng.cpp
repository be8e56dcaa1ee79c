#include "pelab/rng.hpp"

#include <cstring>
#include <stdexcept>

namespace pelab::num {

namespace {

inline std::uint32_t rotl(std::uint32_t v, int c) { return (v << c) | (v >> (32 - c)); }

inline void quarter_round(std::uint32_t& a, std::uint32_t& b, std::uint32_t& c, std::uint32_t& d) {
  a += b; d ^= a; d = rotl(d, 16);
  c += d; b ^= c; b = rotl(b, 12);
  a += b; d ^= a; d = rotl(d, 8);
  c += d; b ^= c; b = rotl(b, 7);
}

inline std::uint32_t load_le32(const std::uint8_t* p) {
  return std::uint32_t(p[0]) | (std::uint32_t(p[1]) << 8) | (std::uint32_t(p[2]) << 16) |
         (std::uint32_t(p[3]) << 24);
}

void chacha20_block(const std::uint8_t key[32], std::uint64_t counter, std::uint8_t out[64]) {
  std::uint32_t st[16];
  st[0] = 0x61707865u; st[1] = 0x3320646eu; st[2] = 0x79622d32u; st[3] = 0x6b206574u;
  for (int i = 0; i < 8; ++i) st[4 + i] = load_le32(key + 4 * i);
  st[12] = std::uint32_t(counter);
  st[13] = std::uint32_t(counter >> 32);
  st[14] = 0;
  st[15] = 0;

  std::uint32_t x[16];
  std::memcpy(x, st, sizeof(x));
  for (int round = 0; round < 10; ++round) {
    quarter_round(x[0], x[4], x[8], x[12]);
    quarter_round(x[1], x[5], x[9], x[13]);
    quarter_round(x[2], x[6], x[10], x[14]);
    quarter_round(x[3], x[7], x[11], x[15]);
    quarter_round(x[0], x[5], x[10], x[15]);
    quarter_round(x[1], x[6], x[11], x[12]);
    quarter_round(x[2], x[7], x[8], x[13]);
    quarter_round(x[3], x[4], x[9], x[14]);
  }
  for (int i = 0; i < 16; ++i) {
    std::uint32_t v = x[i] + st[i];
    out[4 * i + 0] = std::uint8_t(v);
    out[4 * i + 1] = std::uint8_t(v >> 8);
    out[4 * i + 2] = std::uint8_t(v >> 16);
    out[4 * i + 3] = std::uint8_t(v >> 24);
  }
}

}  // namespace

SeededRng::SeededRng(const std::array<std::uint8_t, 32>& seed) : seed_(seed) {}

SeededRng::SeededRng(std::uint64_t seed) {
  seed_.fill(0);
  for (int i = 0; i < 8; ++i) seed_[i] = std::uint8_t(seed >> (8 * i));
  // mark the expanded form so 64-bit seeds cannot collide with raw 32-byte seeds
  seed_[31] = 0x5e;
}

void SeededRng::refill() {
  chacha20_block(seed_.data(), counter_, block_.data());
  ++counter_;
  pos_ = 0;
}

std::uint8_t SeededRng::next_u8() {
  if (pos_ >= 64) refill();
  return block_[pos_++];
}

std::uint32_t SeededRng::next_u32() {
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= std::uint32_t(next_u8()) << (8 * i);
  return v;
}

std::uint64_t SeededRng::next_u64() {
  std::uint64_t lo = next_u32();
  std::uint64_t hi = next_u32();
  return lo | (hi << 32);
}

std::uint64_t SeededRng::below(std::uint64_t bound) {
  if (bound == 0) throw std::domain_error("SeededRng::below: bound must be positive");
  if (bound == 1) return 0;
  // rejection sampling on the smallest covering power-of-two mask
  int bits = 64 - __builtin_clzll(bound - 1);
  std::uint64_t mask = (bits >= 64) ? ~0ull : ((1ull << bits) - 1);
  for (;;) {
    std::uint64_t v = next_u64() & mask;
    if (v < bound) return v;
  }
}

double SeededRng::next_double() {
  return double(next_u64() >> 11) * 0x1.0p-53;
}

std::vector<std::uint8_t> SeededRng::bytes(std::size_t count) {
  std::vector<std::uint8_t> out(count);
  for (auto& b : out) b = next_u8();
  return out;
}

}  // namespace pelab::num
