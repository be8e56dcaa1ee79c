#include "pelab/primes.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace pelab::num {

bool is_probable_prime(const BigUint& n) {
  if (n < 2) return false;
  // 50 Miller-Rabin style rounds: error < 4^-50 < 2^-80
  return mpz_probab_prime_p(n.get_mpz_t(), 50) != 0;
}

std::vector<std::uint32_t> sieve_primes(std::uint32_t limit) {
  std::vector<bool> composite(std::size_t(limit) + 1, false);
  std::vector<std::uint32_t> primes;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(std::uint32_t(i));
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

std::uint64_t prime_in_range(std::uint64_t lo, std::uint64_t hi) {
  if (lo < 2 || lo > hi) throw std::domain_error("prime_in_range: need 2 <= lo <= hi");
  for (std::uint64_t c = lo; c <= hi; ++c) {
    if (is_probable_prime(BigUint(static_cast<unsigned long>(c)))) return c;
    if (c == hi) break;  // avoid overflow when hi == UINT64_MAX
  }
  throw NotFoundError("prime_in_range: no prime in [" + std::to_string(lo) + ", " +
                      std::to_string(hi) + "]");
}

namespace {

bool admissible(const BigUint& p, const BigUint& q, int bits, RsaModulus* out) {
  if (p == q) return false;
  BigUint n = p * q;
  if (int(bit_length(n)) != bits) return false;
  BigUint phi = (p - 1) * (q - 1);
  BigUint g;
  mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), phi.get_mpz_t());
  if (g != 1) return false;
  if (out) {
    out->p = std::min(p, q);
    out->q = std::max(p, q);
    out->n = n;
    out->bit_length = bits;
  }
  return true;
}

}  // namespace

std::vector<RsaModulus> enumerate_rsa_moduli(int bits) {
  if (bits < 4) throw std::domain_error("enumerate_rsa_moduli: bits must be >= 4");
  if (bits > 16) throw std::domain_error("enumerate_rsa_moduli: exhaustive form capped at 16 bits");
  std::uint32_t limit = std::uint32_t(1) << bits;
  auto primes = sieve_primes(limit / 3 + 1);
  std::map<BigUint, RsaModulus> found;  // keyed by N for deterministic order
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (primes[i] == 2) continue;
    for (std::size_t j = i + 1; j < primes.size(); ++j) {
      RsaModulus m;
      if (admissible(BigUint(primes[i]), BigUint(primes[j]), bits, &m)) found[m.n] = m;
    }
  }
  std::vector<RsaModulus> out;
  for (auto& [n, m] : found) out.push_back(m);
  return out;
}

RsaModulus sample_rsa_modulus(int bits, SeededRng& rng) {
  if (bits < 4) throw std::domain_error("sample_rsa_modulus: bits must be >= 4");
  if (bits <= 16) {
    auto all = enumerate_rsa_moduli(bits);
    if (all.empty()) throw NotFoundError("sample_rsa_modulus: no admissible modulus at this width");
    return all[rng.below(all.size())];
  }
  int pb = bits / 2 + 1;
  int qb = bits - pb + 1;
  for (int attempt = 0; attempt < 100000; ++attempt) {
    // random odd candidates of the target widths, stepped to the next prime
    BigUint p = random_below(pow_uint(BigUint(2), pb - 1), rng) + pow_uint(BigUint(2), pb - 1);
    BigUint q = random_below(pow_uint(BigUint(2), qb - 1), rng) + pow_uint(BigUint(2), qb - 1);
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    mpz_nextprime(q.get_mpz_t(), q.get_mpz_t());
    RsaModulus m;
    if (admissible(p, q, bits, &m)) return m;
  }
  throw NotFoundError("sample_rsa_modulus: sampling did not converge");
}

}  // namespace pelab::num
