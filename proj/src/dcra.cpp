#include "pelab/dcra.hpp"

#include <thread>
#include <unordered_set>

namespace pelab::dcra {

using num::BigUint;

int choose_s(int n, int lambda) {
  if (lambda < 2) throw std::domain_error("choose_s: lambda must be >= 2");
  // any lambda-bit N satisfies N >= 2^(lambda-1), so this s gives N^s >= 2^n
  int s = (n + lambda - 2) / (lambda - 1);
  return s < 1 ? 1 : s;
}

BigUint DcraKey::modulus() const {
  return num::pow_uint(N, static_cast<unsigned long>(params.s) + 1);
}

DcraKey dcra_keygen(const DcraParams& params_in, LossyMode mode, num::SeededRng& rng,
                    const KeygenHooks* hooks) {
  DcraParams params = params_in;
  if (params.n < 1) throw std::domain_error("dcra_keygen: n must be >= 1");
  if (params.lambda < 4) throw std::domain_error("dcra_keygen: lambda must be >= 4");
  if (params.s == 0) params.s = choose_s(params.n, params.lambda);
  if (params.s < 1) throw std::domain_error("dcra_keygen: s must be >= 1");
  if (2 * params.lambda * params.s <= params.n)
    throw std::domain_error("dcra_keygen: need 2*lambda*s > n");

  BigUint N;
  if (hooks && hooks->force_N) {
    N = *hooks->force_N;
  } else {
    N = num::sample_rsa_modulus(params.lambda, rng).n;
  }

  BigUint Ns = num::pow_uint(N, static_cast<unsigned long>(params.s));
  BigUint two_n = num::pow_uint(BigUint(2), static_cast<unsigned long>(params.n));
  if (Ns < two_n)
    throw std::domain_error("dcra_keygen: N^s < 2^n, injective contract unsatisfiable");

  BigUint mod = Ns * N;  // N^{s+1}
  BigUint r;
  if (hooks && hooks->force_r) {
    r = *hooks->force_r;
  } else {
    // r uniform in Z*_N
    do {
      r = num::random_below(N, rng);
      BigUint g;
      mpz_gcd(g.get_mpz_t(), r.get_mpz_t(), N.get_mpz_t());
      if (r > 0 && g == 1) break;
    } while (true);
  }

  BigUint c = num::pow_mod(r, Ns, mod);
  if (mode == LossyMode::injective) c = (c * (1 + N)) % mod;

  DcraKey key;
  key.params = params;
  key.N = N;
  key.c = c;
  int need = int(num::bit_length(BigUint(mod - 1)));
  key.out_bits = std::max(params.n + params.lambda, need);
  key.toy = params.lambda < 512;
  key.mode_hint = mode;
  return key;
}

Bits dcra_eval(const DcraKey& key, const Bits& x) {
  if (int(x.size()) != key.params.n) throw std::domain_error("dcra_eval: input width mismatch");
  BigUint xv = bits_to_big(x);
  BigUint y = num::pow_mod(key.c, xv, key.modulus());
  return bits_from_big(y, key.out_bits);
}

std::uint64_t image_census(const std::function<Bits(const Bits&)>& f, int n) {
  if (n < 0) throw std::domain_error("image_census: n must be >= 0");
  if (n > 22) throw RefusalError("image_census: refusing n > 22 (2^n enumeration)");
  std::uint64_t total = std::uint64_t(1) << n;

  auto run_range = [&](std::uint64_t from, std::uint64_t to, std::unordered_set<std::string>* out) {
    for (std::uint64_t v = from; v < to; ++v) out->insert(bits_to_string(f(bits_from_u64(v, n))));
  };

  if (n < 18) {
    std::unordered_set<std::string> seen;
    run_range(0, total, &seen);
    return seen.size();
  }
  unsigned workers = std::min(8u, std::max(1u, std::thread::hardware_concurrency()));
  std::vector<std::unordered_set<std::string>> parts(workers);
  std::vector<std::thread> threads;
  for (unsigned w = 0; w < workers; ++w) {
    std::uint64_t from = total * w / workers, to = total * (w + 1) / workers;
    threads.emplace_back(run_range, from, to, &parts[w]);
  }
  for (auto& t : threads) t.join();
  std::unordered_set<std::string> merged;
  for (auto& p : parts) merged.insert(p.begin(), p.end());
  return merged.size();
}

}  // namespace pelab::dcra
