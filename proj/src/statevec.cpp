#include "pelab/statevec.hpp"

#include <stdexcept>

namespace pelab {

std::int64_t StateVector::pow_dim(int local_dim, int sites) {
  std::int64_t d = 1;
  for (int i = 0; i < sites; ++i) {
    if (d > (std::int64_t(1) << 40) / local_dim)
      throw RefusalError("StateVector: dimension overflow");
    d *= local_dim;
  }
  return d;
}

StateVector make_state(int sites, int local_dim) {
  if (sites < 1 || local_dim < 2) throw std::domain_error("make_state: bad shape");
  std::int64_t d = StateVector::pow_dim(local_dim, sites);
  if (d > (std::int64_t(1) << 24))
    throw RefusalError("make_state: refusing state vectors above 2^24 amplitudes");
  StateVector s;
  s.sites = sites;
  s.local_dim = local_dim;
  s.amp = Eigen::VectorXcd::Zero(d);
  return s;
}

int state_digit(const StateVector& s, std::int64_t v, int site) {
  if (site < 1 || site > s.sites) throw std::domain_error("state_digit: site out of range");
  std::int64_t divisor = 1;
  for (int i = 0; i < s.sites - site; ++i) divisor *= s.local_dim;
  return int((v / divisor) % s.local_dim);
}

}  // namespace pelab
