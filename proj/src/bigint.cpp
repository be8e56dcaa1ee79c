#include "pelab/bigint.hpp"

#include <stdexcept>

namespace pelab::num {

BigUint big_from_hex(const std::string& hex) {
  std::string s = hex;
  if (s.rfind("0x", 0) == 0 || s.rfind("0X", 0) == 0) s = s.substr(2);
  if (s.empty()) throw std::domain_error("big_from_hex: empty string");
  BigUint v;
  if (v.set_str(s, 16) != 0) throw std::domain_error("big_from_hex: bad hex literal: " + hex);
  if (v < 0) throw std::domain_error("big_from_hex: negative value");
  return v;
}

std::string big_to_hex(const BigUint& v) {
  if (v < 0) throw std::domain_error("big_to_hex: negative value");
  return "0x" + v.get_str(16);
}

std::size_t bit_length(const BigUint& v) {
  if (v == 0) return 0;
  return mpz_sizeinbase(v.get_mpz_t(), 2);
}

BigUint pow_mod(const BigUint& base, const BigUint& exp, const BigUint& modulus) {
  if (modulus < 2) throw std::domain_error("pow_mod: modulus must be >= 2");
  if (exp < 0) throw std::domain_error("pow_mod: negative exponent");
  BigUint r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), modulus.get_mpz_t());
  return r;
}

BigUint pow_uint(const BigUint& base, unsigned long exp) {
  BigUint r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

BigUint random_below(const BigUint& bound, SeededRng& rng) {
  if (bound < 1) throw std::domain_error("random_below: bound must be >= 1");
  if (bound == 1) return 0;
  std::size_t bits = bit_length(BigUint(bound - 1));
  std::size_t nbytes = (bits + 7) / 8;
  unsigned top_mask = (bits % 8 == 0) ? 0xff : ((1u << (bits % 8)) - 1);
  for (;;) {
    BigUint v = 0;
    for (std::size_t i = 0; i < nbytes; ++i) {
      unsigned byte = rng.next_u8();
      if (i == 0) byte &= top_mask;  // big-endian draw, mask the leading byte
      v <<= 8;
      v += byte;
    }
    if (v < bound) return v;
  }
}

}  // namespace pelab::num
