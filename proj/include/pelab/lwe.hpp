#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pelab/bits.hpp"
#include "pelab/dcra.hpp"
#include "pelab/gaussian.hpp"

namespace pelab::lwe {

struct LweParams {
  int n = 0;            // input length / matrix dimension
  int lambda = 0;       // security parameter
  std::uint64_t p = 17; // rounding range, 2^4 + 1
  std::uint64_t q = 0;  // prime modulus
  double sigma = 0;     // Gaussian width
};

// q = smallest prime in [8 p n^2 sqrt(lambda), 16 p n^2 sqrt(lambda)],
// sigma = 2 sqrt(lambda). The theorem-regime parameterization.
LweParams lwe_params_for(int n, int lambda);

// Index of the bin containing (x + floor(c/2)) mod q, with c = floor(q/p)
// and bin index of y given by floor(y*p/q). The shift centers 0 inside a bin.
std::uint32_t shifted_round(std::uint64_t x, std::uint64_t q, std::uint64_t p);

struct LweKey {
  LweParams params;
  std::vector<std::uint32_t> A;  // row-major n x n over Z_q
  bool toy = false;
  std::optional<LossyMode> mode_hint;  // test-only

  std::uint32_t at(int row, int col) const {
    return A[std::size_t(row) * std::size_t(params.n) + std::size_t(col)];
  }
};

// injective: A uniform over Z_q^{n x n}
// lossy:     A = B^T C + E with B, C uniform lambda x n and E discrete Gaussian
LweKey lwe_keygen(const LweParams& params, LossyMode mode, num::SeededRng& rng);

// componentwise shifted rounding of A x with x in {0,1}^n
std::vector<std::uint32_t> lwe_eval(const LweKey& key, const Bits& x);

// Signed error matrix draw, exposed for the tail-bound Monte Carlo.
std::vector<std::vector<std::int64_t>> sample_error_matrix(int rows, int cols, double sigma,
                                                           num::SeededRng& rng);

// true iff every row 1-norm is strictly below beta
bool row_norm_bound_check(const std::vector<std::vector<std::int64_t>>& E, double beta);

// distinct-output count over all 2^n inputs, n <= 22
std::uint64_t lwe_image_census(const LweKey& key);

}  // namespace pelab::lwe
