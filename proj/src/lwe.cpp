#include "pelab/lwe.hpp"

#include <cmath>
#include <unordered_set>

#include "pelab/primes.hpp"

namespace pelab::lwe {

LweParams lwe_params_for(int n, int lambda) {
  if (n < 1 || lambda < 1) throw std::domain_error("lwe_params_for: n, lambda must be >= 1");
  LweParams params;
  params.n = n;
  params.lambda = lambda;
  params.p = 17;
  double base = 8.0 * double(params.p) * double(n) * double(n) * std::sqrt(double(lambda));
  params.q = num::prime_in_range(std::uint64_t(std::ceil(base)), std::uint64_t(2.0 * base));
  params.sigma = 2.0 * std::sqrt(double(lambda));
  return params;
}

std::uint32_t shifted_round(std::uint64_t x, std::uint64_t q, std::uint64_t p) {
  if (x >= q) throw std::domain_error("shifted_round: x out of range");
  if (p < 2 || p > q) throw std::domain_error("shifted_round: need 2 <= p <= q");
  std::uint64_t c = q / p;
  std::uint64_t y = (x + c / 2) % q;
  return std::uint32_t((unsigned __int128)(y) * p / q);
}

LweKey lwe_keygen(const LweParams& params, LossyMode mode, num::SeededRng& rng) {
  if (params.n < 1) throw std::domain_error("lwe_keygen: n must be >= 1");
  if (params.q < 2 || !num::is_probable_prime(num::BigUint(static_cast<unsigned long>(params.q))))
    throw std::domain_error("lwe_keygen: q must be a prime >= 2");
  if (params.p < 2 || params.p > params.q) throw std::domain_error("lwe_keygen: need 2 <= p <= q");

  int n = params.n, lam = params.lambda;
  LweKey key;
  key.params = params;
  key.A.assign(std::size_t(n) * std::size_t(n), 0);
  key.toy = params.q < (std::uint64_t(1) << 40);
  key.mode_hint = mode;

  if (mode == LossyMode::injective) {
    for (auto& a : key.A) a = std::uint32_t(rng.below(params.q));
    return key;
  }

  if (lam < 1) throw std::domain_error("lwe_keygen: lossy mode needs lambda >= 1");
  std::vector<std::uint64_t> B(std::size_t(lam) * std::size_t(n));
  std::vector<std::uint64_t> C(std::size_t(lam) * std::size_t(n));
  for (auto& b : B) b = rng.below(params.q);
  for (auto& c : C) c = rng.below(params.q);
  num::DiscreteGaussian err(params.sigma);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      unsigned __int128 acc = 0;
      for (int t = 0; t < lam; ++t)
        acc += (unsigned __int128)(B[std::size_t(t) * n + std::size_t(i)]) *
               C[std::size_t(t) * n + std::size_t(j)];
      std::uint64_t v = std::uint64_t(acc % params.q);
      v = (v + err.sample_mod(params.q, rng)) % params.q;
      key.A[std::size_t(i) * n + std::size_t(j)] = std::uint32_t(v);
    }
  }
  return key;
}

std::vector<std::uint32_t> lwe_eval(const LweKey& key, const Bits& x) {
  int n = key.params.n;
  if (int(x.size()) != n) throw std::domain_error("lwe_eval: input width mismatch");
  std::vector<std::uint32_t> out(std::size_t(n));
  for (int i = 0; i < n; ++i) {
    std::uint64_t acc = 0;
    for (int j = 0; j < n; ++j)
      if (x[std::size_t(j)]) acc += key.at(i, j);
    out[std::size_t(i)] = shifted_round(acc % key.params.q, key.params.q, key.params.p);
  }
  return out;
}

std::vector<std::vector<std::int64_t>> sample_error_matrix(int rows, int cols, double sigma,
                                                           num::SeededRng& rng) {
  num::DiscreteGaussian err(sigma);
  std::vector<std::vector<std::int64_t>> E(std::size_t(rows));
  for (auto& row : E) {
    row.resize(std::size_t(cols));
    for (auto& e : row) e = err.sample_signed(rng);
  }
  return E;
}

bool row_norm_bound_check(const std::vector<std::vector<std::int64_t>>& E, double beta) {
  for (const auto& row : E) {
    double norm = 0;
    for (auto e : row) norm += double(e < 0 ? -e : e);
    if (norm >= beta) return false;
  }
  return true;
}

std::uint64_t lwe_image_census(const LweKey& key) {
  int n = key.params.n;
  if (n > 22) throw RefusalError("lwe_image_census: refusing n > 22");
  std::unordered_set<std::string> seen;
  std::uint64_t total = std::uint64_t(1) << n;
  std::string buf;
  for (std::uint64_t v = 0; v < total; ++v) {
    auto out = lwe_eval(key, bits_from_u64(v, n));
    buf.clear();
    for (auto o : out) {
      buf.push_back(char('0' + (o % 17)));
      buf.push_back(char('a' + (o / 17)));
    }
    seen.insert(buf);
  }
  return seen.size();
}

}  // namespace pelab::lwe
