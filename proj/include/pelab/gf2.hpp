#pragma once

#include <cstdint>
#include <utility>

namespace pelab::gf {

// GF(2^w) for 1 <= w <= 128, with a fixed modulus per width: the
// lexicographically smallest irreducible polynomial of degree w. The choice
// is deterministic, so field elements and hash fixtures are bit-exact across
// platforms and implementations.
struct Elt {
  std::uint64_t lo = 0, hi = 0;

  bool operator==(const Elt&) const = default;
};

// Low coefficients of the width-w modulus (the x^w term is implicit).
Elt field_modulus(int w);

Elt add(Elt a, Elt b);          // xor
Elt mul(Elt a, Elt b, int w);   // carry-less multiply, reduced mod the width-w modulus
Elt truncate(Elt a, int bits);  // keep the low `bits` coefficients

bool test_bit(const Elt& a, int i);
void set_bit(Elt& a, int i);

// Irreducibility of x^w + low over GF(2); exposed for tests.
bool is_irreducible(Elt low, int w);

}  // namespace pelab::gf
