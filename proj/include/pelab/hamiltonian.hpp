#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <vector>

#include "pelab/machine.hpp"

namespace pelab::ham {

// One |after><before| (x) identity piece of a local term. Constrained cells
// are listed explicitly; every other track/cell acts as identity. Terms stay
// in this sparse pattern form throughout: the full two-site matrix would be
// site_dim^2 squared entries, far past desk scale.
struct PartialOp {
  std::vector<std::uint8_t> track;
  std::vector<std::uint8_t> cell;  // 0 or 1 relative to the term's site
  std::vector<std::uint8_t> before;
  std::vector<std::uint8_t> after;
  std::complex<double> coeff{0.0, 0.0};
};

struct LocalTerm {
  int site = 0;
  int width = 1;  // 1 or 2 adjacent sites
  std::string tag;  // "valid" | "transition" | "input"
  std::vector<PartialOp> pieces;
};

struct HamiltonianSpec {
  tm::MachineLayout layout;
  std::vector<int> input;  // w*
  std::vector<LocalTerm> terms;
};

// Penalty terms whose nullspace is exactly the span of valid configurations.
std::vector<LocalTerm> build_h_valid(const tm::MachineLayout& layout);

// Hopping terms, one per distinct rewrite rule; restricted to any input
// branch they reproduce the T x T tridiagonal matrix with 1/2 corners.
std::vector<LocalTerm> build_h_transition(const tm::RuleSet& rules);

// Single-site checks bound to the initialization sweep: when the plain head
// visits cell j, the column must look exactly like the canonical start for
// w*_j.
std::vector<LocalTerm> build_h_input(const tm::MachineLayout& layout,
                                     const std::vector<int>& wstar);

HamiltonianSpec build_hamiltonian(const tm::RuleSet& rules, const std::vector<int>& wstar);

using Vec = tm::Superposition;

double vec_norm(const Vec& v);
std::complex<double> vec_dot(const Vec& a, const Vec& b);  // <a|b>

Vec apply(const HamiltonianSpec& h, const Vec& v);
Vec apply_tagged(const HamiltonianSpec& h, const Vec& v, const std::string& tag);
double diag_energy(const HamiltonianSpec& h, const tm::Config& c, const std::string& tag = "");

// (1/sqrt(T)) sum_t |c^(t)>; the per-step superpositions are optionally kept.
Vec history_state(const tm::RuleSet& rules, const tm::Config& init,
                  std::vector<Vec>* steps = nullptr);

Eigen::MatrixXcd restrict_to(const HamiltonianSpec& h, const std::vector<Vec>& basis);
Eigen::MatrixXcd restrict_tagged(const HamiltonianSpec& h, const std::vector<Vec>& basis,
                                 const std::string& tag);

// The T x T path matrix: diagonal (1/2, 1, ..., 1, 1/2), off-diagonals -1/2.
Eigen::MatrixXd transition_path_matrix(long t);

struct Spectrum {
  std::vector<double> eigenvalues;  // ascending, how_many of them
  Eigen::VectorXcd ground;
};

// Dense solve for dim <= 2000, deterministic Lanczos (all-ones start,
// tolerance 1e-10) above that.
Spectrum spectrum(const Eigen::MatrixXcd& m, int how_many);

double kitaev_bound(double a1, double a2, double lambda, double theta);

struct GapReport {
  double ground_energy = 0;      // w* block
  double restricted_gap = 0;     // second eigenvalue minus ground, w* block
  double min_other_block = 0;    // smallest sampled wrong-input block energy
  double invalid_floor = 0;      // smallest sampled <c|H|c> over invalid configs
  int other_blocks = 0;
  int invalid_samples = 0;
};

GapReport gap_report(const HamiltonianSpec& h, const tm::RuleSet& rules,
                     const std::vector<int>& wstar, int other_blocks, int invalid_samples,
                     std::uint64_t seed);

}  // namespace pelab::ham
