#include "pelab/gf2.hpp"

#include <array>
#include <mutex>
#include <stdexcept>

namespace pelab::gf {

namespace {

// 256-bit polynomial over GF(2), dense in four words. Used for the carry-less
// product before reduction and inside the irreducibility search.
using Wide = std::array<std::uint64_t, 4>;

inline bool wide_bit(const Wide& p, int i) { return (p[i >> 6] >> (i & 63)) & 1; }
inline void wide_set(Wide& p, int i) { p[i >> 6] |= std::uint64_t(1) << (i & 63); }

inline int wide_degree(const Wide& p) {
  for (int w = 3; w >= 0; --w)
    if (p[w]) return 64 * w + 63 - __builtin_clzll(p[w]);
  return -1;  // zero polynomial
}

inline void wide_xor_shifted(Wide& p, const Wide& q, int shift) {
  int wordsh = shift >> 6, bitsh = shift & 63;
  for (int w = 3; w >= wordsh; --w) {
    std::uint64_t v = q[w - wordsh] << bitsh;
    if (bitsh && w - wordsh - 1 >= 0) v |= q[w - wordsh - 1] >> (64 - bitsh);
    p[w] ^= v;
  }
}

Wide wide_clmul(Elt a, Elt b) {
  Wide acc{0, 0, 0, 0};
  Wide bb{b.lo, b.hi, 0, 0};
  for (int i = 0; i < 128; ++i) {
    std::uint64_t word = (i < 64) ? a.lo : a.hi;
    if ((word >> (i & 63)) & 1) wide_xor_shifted(acc, bb, i);
  }
  return acc;
}

// reduce p modulo x^w + low
Elt wide_reduce(Wide p, Elt low, int w) {
  Wide f{low.lo, low.hi, 0, 0};
  wide_set(f, w);
  for (int d = wide_degree(p); d >= w; d = wide_degree(p)) {
    wide_xor_shifted(p, f, d - w);
  }
  return Elt{p[0], p[1]};
}

Elt poly_mulmod(Elt a, Elt b, Elt low, int w) { return wide_reduce(wide_clmul(a, b), low, w); }

// x^(2^e) mod (x^w + low), by repeated squaring of x
Elt frobenius_power(int e, Elt low, int w) {
  Elt x{};
  if (w == 1) {
    x = low;  // x = low mod (x + low)
  } else {
    x = Elt{2, 0};  // the polynomial "x"
  }
  for (int i = 0; i < e; ++i) x = poly_mulmod(x, x, low, w);
  return x;
}

// gcd of (x^w + low_f) with g (degree < w), both over GF(2)
Wide wide_mod(Wide a, const Wide& m) {
  int dm = wide_degree(m);
  for (int d = wide_degree(a); d >= dm && d >= 0; d = wide_degree(a)) {
    wide_xor_shifted(a, m, d - dm);
    if (wide_degree(a) < dm) break;
  }
  return a;
}

Wide wide_gcd(Wide a, Wide b) {
  while (wide_degree(b) >= 0) {
    Wide r = wide_mod(a, b);
    a = b;
    b = r;
  }
  return a;
}

}  // namespace

bool is_irreducible(Elt low, int w) {
  // constant term must be 1, else x divides
  if (!(low.lo & 1)) return false;
  // x^(2^w) == x mod f
  Elt xq = frobenius_power(w, low, w);
  Elt x = (w == 1) ? low : Elt{2, 0};
  if (!(xq == x)) return false;
  // for each prime divisor d of w: gcd(x^(2^(w/d)) - x, f) == 1
  int rem = w;
  for (int d = 2; d * d <= rem; ++d) {
    if (rem % d) continue;
    while (rem % d == 0) rem /= d;
    Elt y = frobenius_power(w / d, low, w);
    Wide g{y.lo ^ x.lo, y.hi ^ x.hi, 0, 0};
    if (wide_degree(g) < 0) return false;
    Wide f{low.lo, low.hi, 0, 0};
    wide_set(f, w);
    if (wide_degree(wide_gcd(f, g)) != 0) return false;
  }
  if (rem > 1) {
    Elt y = frobenius_power(w / rem, low, w);
    Wide g{y.lo ^ x.lo, y.hi ^ x.hi, 0, 0};
    if (wide_degree(g) < 0) return false;
    Wide f{low.lo, low.hi, 0, 0};
    wide_set(f, w);
    if (wide_degree(wide_gcd(f, g)) != 0) return false;
  }
  return true;
}

Elt field_modulus(int w) {
  if (w < 1 || w > 128) throw std::domain_error("field_modulus: width must be in [1,128]");
  static std::array<Elt, 129> cache;
  static std::array<bool, 129> have{};
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  if (have[w]) return cache[w];
  // scan candidate low parts in numeric order; degree < w so hi bits beyond
  // w-1 never appear for w <= 64, and we extend through hi for larger w
  for (unsigned __int128 c = 1;; c += 2) {
    Elt low{std::uint64_t(c), std::uint64_t(c >> 64)};
    if (w <= 64 && w < 64 && (low.lo >> w)) throw std::logic_error("field_modulus: search overran");
    if (is_irreducible(low, w)) {
      cache[w] = low;
      have[w] = true;
      return low;
    }
  }
}

Elt add(Elt a, Elt b) { return Elt{a.lo ^ b.lo, a.hi ^ b.hi}; }

Elt mul(Elt a, Elt b, int w) { return wide_reduce(wide_clmul(a, b), field_modulus(w), w); }

Elt truncate(Elt a, int bits) {
  if (bits >= 128) return a;
  if (bits >= 64) {
    a.hi &= (bits == 64) ? 0 : ((std::uint64_t(1) << (bits - 64)) - 1);
    return a;
  }
  return Elt{bits == 0 ? 0 : (a.lo & ((std::uint64_t(1) << bits) - 1)), 0};
}

bool test_bit(const Elt& a, int i) {
  return i < 64 ? ((a.lo >> i) & 1) : ((a.hi >> (i - 64)) & 1);
}

void set_bit(Elt& a, int i) {
  if (i < 64) a.lo |= std::uint64_t(1) << i;
  else a.hi |= std::uint64_t(1) << (i - 64);
}

}  // namespace pelab::gf
