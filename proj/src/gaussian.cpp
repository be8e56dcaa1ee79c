#include "pelab/gaussian.hpp"

#include <cmath>
#include <stdexcept>

namespace pelab::num {

DiscreteGaussian::DiscreteGaussian(double sigma) : sigma_(sigma) {
  if (!(sigma > 0)) throw std::domain_error("DiscreteGaussian: sigma must be positive");
  support_ = std::int64_t(std::ceil(10.0 * sigma));
  double total = 0;
  cdf_.reserve(std::size_t(2 * support_ + 1));
  for (std::int64_t x = -support_; x <= support_; ++x) {
    total += std::exp(-double(x) * double(x) / (2.0 * sigma * sigma));
    cdf_.push_back(total);
  }
  for (auto& c : cdf_) c /= total;
}

std::int64_t DiscreteGaussian::sample_signed(SeededRng& rng) const {
  double u = rng.next_double();
  // binary search the first cdf entry >= u
  std::size_t lo = 0, hi = cdf_.size() - 1;
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (cdf_[mid] >= u) hi = mid; else lo = mid + 1;
  }
  return std::int64_t(lo) - support_;
}

std::uint64_t DiscreteGaussian::sample_mod(std::uint64_t q, SeededRng& rng) const {
  if (q < 2) throw std::domain_error("DiscreteGaussian::sample_mod: q must be >= 2");
  std::int64_t x = sample_signed(rng);
  std::int64_t r = x % std::int64_t(q);
  if (r < 0) r += std::int64_t(q);
  return std::uint64_t(r);
}

double DiscreteGaussian::mass(std::int64_t x) const {
  if (x < -support_ || x > support_) return 0.0;
  std::size_t idx = std::size_t(x + support_);
  double prev = idx == 0 ? 0.0 : cdf_[idx - 1];
  return cdf_[idx] - prev;
}

std::uint64_t sample_discrete_gaussian(double sigma, std::uint64_t q, SeededRng& rng) {
  return DiscreteGaussian(sigma).sample_mod(q, rng);
}

}  // namespace pelab::num
