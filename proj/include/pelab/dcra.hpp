#pragma once

#include <functional>
#include <optional>

#include "pelab/bits.hpp"
#include "pelab/errors.hpp"
#include "pelab/primes.hpp"

namespace pelab {

enum class LossyMode { injective, lossy };

namespace dcra {

struct DcraParams {
  int n = 0;       // input bits
  int lambda = 0;  // modulus bit length
  int s = 0;       // exponent; 0 means "choose the smallest s with N^s >= 2^n"
};

int choose_s(int n, int lambda);

// Key (N, s, c) with c = (1+N) r^{N^s} mod N^{s+1} (injective branch) or
// c = r^{N^s} mod N^{s+1} (lossy branch), r uniform in Z*_N.
//
// Evaluation emits exactly out_bits bits. out_bits is n + lambda when
// N^{s+1} fits that width; otherwise it is the bit length of N^{s+1}-1.
// Real moduli need ~lambda extra bits per application regardless of the
// nominal "+lambda" growth, so the wider encoding is kept rather than
// rejecting the key.
struct DcraKey {
  DcraParams params;
  num::BigUint N;
  num::BigUint c;
  int out_bits = 0;
  bool toy = false;  // lambda < 512
  std::optional<LossyMode> mode_hint;  // test-only metadata; never consulted by eval

  num::BigUint modulus() const;  // N^{s+1}
};

struct KeygenHooks {
  std::optional<num::BigUint> force_N;
  std::optional<num::BigUint> force_r;
};

DcraKey dcra_keygen(const DcraParams& params, LossyMode mode, num::SeededRng& rng,
                    const KeygenHooks* hooks = nullptr);

// c^x mod N^{s+1}, big-endian in exactly key.out_bits bits.
Bits dcra_eval(const DcraKey& key, const Bits& x);

// Exact count of distinct outputs of f over all 2^n inputs; n <= 22.
std::uint64_t image_census(const std::function<Bits(const Bits&)>& f, int n);

}  // namespace dcra
}  // namespace pelab
