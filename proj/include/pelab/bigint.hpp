#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "pelab/rng.hpp"

namespace pelab::num {

// Arbitrary-precision non-negative integers. GMP supplies the arithmetic;
// everything here keeps values canonical and serialized as lowercase hex
// with a "0x" prefix.
using BigUint = mpz_class;

BigUint big_from_hex(const std::string& hex);
std::string big_to_hex(const BigUint& v);

std::size_t bit_length(const BigUint& v);  // bit_length(0) == 0

// base^exp mod modulus; modulus >= 2 or std::domain_error.
BigUint pow_mod(const BigUint& base, const BigUint& exp, const BigUint& modulus);

BigUint pow_uint(const BigUint& base, unsigned long exp);

// Uniform in [0, bound), bound >= 1. Consumes whole bytes from the rng,
// rejection sampled, so the draw is exact and platform independent.
BigUint random_below(const BigUint& bound, SeededRng& rng);

}  // namespace pelab::num
