#include "pelab/bits.hpp"

#include <stdexcept>

namespace pelab {

Bits bits_from_u64(std::uint64_t value, int width) {
  if (width < 0 || width > 64) throw std::domain_error("bits_from_u64: bad width");
  if (width < 64 && (value >> width)) throw std::domain_error("bits_from_u64: value too wide");
  Bits b(std::size_t(width));
  for (int i = 0; i < width; ++i) b[std::size_t(i)] = (value >> (width - 1 - i)) & 1;
  return b;
}

std::uint64_t bits_to_u64(const Bits& b) {
  if (b.size() > 64) throw std::domain_error("bits_to_u64: string too wide");
  std::uint64_t v = 0;
  for (auto bit : b) v = (v << 1) | (bit & 1);
  return v;
}

Bits bits_from_big(const num::BigUint& value, int width) {
  if (value < 0) throw std::domain_error("bits_from_big: negative");
  if (int(num::bit_length(value)) > width) throw std::domain_error("bits_from_big: value too wide");
  Bits b(std::size_t(width));
  for (int i = 0; i < width; ++i)
    b[std::size_t(width - 1 - i)] = mpz_tstbit(value.get_mpz_t(), mp_bitcnt_t(i)) ? 1 : 0;
  return b;
}

num::BigUint bits_to_big(const Bits& b) {
  num::BigUint v = 0;
  for (auto bit : b) {
    v <<= 1;
    if (bit) v += 1;
  }
  return v;
}

Bits bits_concat(const Bits& a, const Bits& b) {
  Bits out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Bits bits_slice(const Bits& b, int from, int len) {
  if (from < 0 || len < 0 || std::size_t(from + len) > b.size())
    throw std::domain_error("bits_slice: out of range");
  return Bits(b.begin() + from, b.begin() + from + len);
}

Bits random_bits(int width, num::SeededRng& rng) {
  Bits b(std::size_t(width));
  for (auto& bit : b) bit = rng.next_u8() & 1;
  return b;
}

std::string bits_to_string(const Bits& b) {
  std::string s;
  s.reserve(b.size());
  for (auto bit : b) s.push_back(bit ? '1' : '0');
  return s;
}

Bits bits_from_string(const std::string& s) {
  Bits b;
  b.reserve(s.size());
  for (char c : s) {
    if (c != '0' && c != '1') throw std::domain_error("bits_from_string: bad character");
    b.push_back(c == '1');
  }
  return b;
}

}  // namespace pelab
