#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "pelab/statevec.hpp"

namespace pelab::ent {

// Subset of sites; bit (site-1) set means the site belongs to side A.
struct CutSpec {
  int sites = 0;
  std::uint32_t mask = 0;

  static CutSpec prefix(int sites, int c);  // sites 1..c
  int size_a() const;
  bool in_a(int site) const { return (mask >> (site - 1)) & 1; }
};

// Partial trace over the complement of the cut. Side-A dimension capped at 2^14.
Eigen::MatrixXcd reduced_density(const StateVector& state, const CutSpec& cut);

// von Neumann entropy in bits; eigenvalues below -1e-10 reject the input,
// small negatives are clipped to zero. Throws on non-Hermitian input.
double entropy_bits(const Eigen::MatrixXcd& rho);

// Entanglement entropy of a pure state across the cut, via singular values of
// the reshaped amplitude matrix (no density matrix materialized).
double cut_entropy(const StateVector& state, const CutSpec& cut);

std::vector<std::pair<int, double>> entropy_profile(const StateVector& state, int margin);

// +-1 matrix of a phase function reshaped along a cut: T_{ij} = (-1)^{s(i ||_I j)}.
struct TMatrix {
  int n = 0;            // total qubits
  int rows_bits = 0;    // |I|
  Eigen::MatrixXd m;
};

TMatrix t_matrix(const std::function<int(std::uint64_t)>& phase, int n, const CutSpec& cut);

// Exact rank over the rationals (computed modulo two large primes; a prime
// divides some minor with probability too small to matter, and taking max
// over two primes never overcounts).
long t_rank_exact(const TMatrix& t);

// (-log2 ||T T^t / 2^n||_2, log2 rank T): the entropy sandwich of a phase state.
std::pair<double, double> entropy_bounds(const TMatrix& t);

bool cutwise_orthogonal(const StateVector& psi0, const StateVector& psi1, const CutSpec& cut,
                        double tol = 1e-10);

// Entropy of an equal superposition of two cutwise-orthogonal states:
// (s0 + s1)/2 + 1 bit.
double superposed_entropy(double s0, double s1);

double binary_entropy(double x);

// 2 eps log|A| + (1+eps) h(eps/(1+eps)), logs base 2, log_dim_a = log2 dim(H_A).
double continuity_bound(double eps, double log_dim_a);

// Entropy across a bipartition of a pure state given as a list of branches
// amp * |labelA> |labelB>; labels are opaque strings, equal label = equal ket.
struct Branch {
  std::complex<double> amp;
  std::string label_a, label_b;
};
double entropy_of_branches(const std::vector<Branch>& branches);

}  // namespace pelab::ent
