#include "pelab/rwise.hpp"

#include <stdexcept>

namespace pelab::hashfam {

namespace {

gf::Elt elt_from_bits(const Bits& b) {
  // bits are MSB first; bit i of the string becomes coefficient (len-1-i)
  gf::Elt e{};
  int len = int(b.size());
  for (int i = 0; i < len; ++i)
    if (b[std::size_t(i)]) gf::set_bit(e, len - 1 - i);
  return e;
}

Bits elt_to_bits(const gf::Elt& e, int width) {
  Bits out(std::size_t(width));
  for (int i = 0; i < width; ++i) out[std::size_t(i)] = gf::test_bit(e, width - 1 - i) ? 1 : 0;
  return out;
}

gf::Elt random_elt(int w, num::SeededRng& rng) {
  gf::Elt e{};
  for (int i = 0; i < w; i += 8) {
    unsigned byte = rng.next_u8();
    for (int j = 0; j < 8 && i + j < w; ++j)
      if ((byte >> j) & 1) gf::set_bit(e, i + j);
  }
  return e;
}

}  // namespace

RwiseKey sample_rwise_key(int r, int in_bits, int out_bits, num::SeededRng& rng) {
  if (r < 1) throw std::domain_error("sample_rwise_key: r must be >= 1");
  if (in_bits < 1 || out_bits < 1)
    throw std::domain_error("sample_rwise_key: widths must be >= 1");
  int w = in_bits > out_bits ? in_bits : out_bits;
  if (w > 128) throw std::domain_error("sample_rwise_key: field width capped at 128 bits");
  RwiseKey key{r, in_bits, out_bits, {}};
  key.coeffs.reserve(std::size_t(r));
  for (int i = 0; i < r; ++i) key.coeffs.push_back(random_elt(w, rng));
  return key;
}

Bits eval_rwise(const RwiseKey& key, const Bits& x) {
  if (int(x.size()) != key.in_bits)
    throw std::domain_error("eval_rwise: input width mismatch");
  int w = key.field_bits();
  gf::Elt xe = elt_from_bits(x);
  // Horner evaluation of sum coeffs[i] x^i
  gf::Elt acc{};
  for (int i = key.r - 1; i >= 0; --i) {
    acc = gf::mul(acc, xe, w);
    acc = gf::add(acc, key.coeffs[std::size_t(i)]);
  }
  return elt_to_bits(gf::truncate(acc, key.out_bits), key.out_bits);
}

std::uint64_t eval_rwise_u64(const RwiseKey& key, std::uint64_t x) {
  return bits_to_u64(eval_rwise(key, bits_from_u64(x, key.in_bits)));
}

}  // namespace pelab::hashfam
