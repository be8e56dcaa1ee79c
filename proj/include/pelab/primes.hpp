#pragma once

#include <cstdint>
#include <vector>

#include "pelab/bigint.hpp"
#include "pelab/errors.hpp"
#include "pelab/rng.hpp"

namespace pelab::num {

// Probabilistic primality with error below 2^-80.
bool is_probable_prime(const BigUint& n);

// Smallest prime p with lo <= p <= hi; throws NotFoundError if none.
// Preconditions: 2 <= lo <= hi.
std::uint64_t prime_in_range(std::uint64_t lo, std::uint64_t hi);

// N = P*Q with P != Q odd primes, gcd(N, (P-1)(Q-1)) = 1, and N exactly
// `bits` bits wide. This is the Damgard-Jurik admissibility requirement;
// it makes (1+N) have order N^s modulo N^{s+1}.
struct RsaModulus {
  BigUint n, p, q;
  int bit_length = 0;
};

// bits >= 4 (no valid P,Q pair below that). For bits <= 16 the candidate set
// is enumerated exhaustively and sampled uniformly; larger sizes use
// rejection sampling over random prime pairs.
RsaModulus sample_rsa_modulus(int bits, SeededRng& rng);

// All admissible moduli of exactly `bits` bits (bits <= 16). Test oracle and
// the backing set for the exhaustive branch of sample_rsa_modulus.
std::vector<RsaModulus> enumerate_rsa_moduli(int bits);

std::vector<std::uint32_t> sieve_primes(std::uint32_t limit);

}  // namespace pelab::num
