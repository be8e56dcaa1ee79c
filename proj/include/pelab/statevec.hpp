#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>

#include "pelab/errors.hpp"

namespace pelab {

// Dense amplitude vector over `sites` qudits of uniform local dimension.
// Site 1 is the most significant digit of the basis index.
struct StateVector {
  int sites = 0;
  int local_dim = 2;
  Eigen::VectorXcd amp;

  std::int64_t dim() const { return amp.size(); }
  double norm() const { return amp.norm(); }

  static std::int64_t pow_dim(int local_dim, int sites);
};

StateVector make_state(int sites, int local_dim);

// digit of basis index v at `site` (1-based)
int state_digit(const StateVector& s, std::int64_t v, int site);

}  // namespace pelab
