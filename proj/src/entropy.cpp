#include "pelab/entropy.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <map>
#include <stdexcept>

#include "pelab/primes.hpp"

namespace pelab::ent {

CutSpec CutSpec::prefix(int sites, int c) {
  if (c < 1 || c >= sites) throw std::domain_error("CutSpec::prefix: need 1 <= c < sites");
  CutSpec cut;
  cut.sites = sites;
  cut.mask = (c == 32) ? ~std::uint32_t(0) : ((std::uint32_t(1) << c) - 1);
  return cut;
}

int CutSpec::size_a() const { return __builtin_popcount(mask & ((sites == 32) ? ~0u : ((1u << sites) - 1))); }

namespace {

void check_cut(const StateVector& state, const CutSpec& cut) {
  if (cut.sites != state.sites) throw std::domain_error("cut does not match state");
  int a = cut.size_a();
  if (a == 0 || a == state.sites) throw std::domain_error("cut must split the sites");
}

// Reshape amplitudes into a (dimA x dimB) matrix following the cut.
Eigen::MatrixXcd reshape_by_cut(const StateVector& state, const CutSpec& cut) {
  int n = state.sites, d = state.local_dim;
  std::vector<int> a_sites, b_sites;
  for (int s = 1; s <= n; ++s) (cut.in_a(s) ? a_sites : b_sites).push_back(s);
  std::int64_t dim_a = StateVector::pow_dim(d, int(a_sites.size()));
  std::int64_t dim_b = StateVector::pow_dim(d, int(b_sites.size()));
  Eigen::MatrixXcd m(dim_a, dim_b);
  // weight of each site in the global index (site 1 most significant)
  std::vector<std::int64_t> w(std::size_t(n) + 1);
  {
    std::int64_t acc = 1;
    for (int s = n; s >= 1; --s) { w[std::size_t(s)] = acc; acc *= d; }
  }
  for (std::int64_t v = 0; v < state.dim(); ++v) {
    std::int64_t ra = 0, rb = 0;
    for (int s : a_sites) ra = ra * d + (v / w[std::size_t(s)]) % d;
    for (int s : b_sites) rb = rb * d + (v / w[std::size_t(s)]) % d;
    m(ra, rb) = state.amp[v];
  }
  return m;
}

double entropy_from_singular_values(const Eigen::VectorXd& sv) {
  double s = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    double p = sv[i] * sv[i];
    if (p > 1e-300) s -= p * std::log2(p);
  }
  return s;
}

}  // namespace

Eigen::MatrixXcd reduced_density(const StateVector& state, const CutSpec& cut) {
  check_cut(state, cut);
  int a = cut.size_a();
  if (StateVector::pow_dim(state.local_dim, a) > (std::int64_t(1) << 14))
    throw RefusalError("reduced_density: side-A dimension above 2^14");
  Eigen::MatrixXcd m = reshape_by_cut(state, cut);
  return m * m.adjoint();
}

double entropy_bits(const Eigen::MatrixXcd& rho) {
  if (rho.rows() != rho.cols()) throw std::domain_error("entropy_bits: not square");
  if ((rho - rho.adjoint()).norm() > 1e-8 * std::max<double>(1.0, rho.norm()))
    throw std::domain_error("entropy_bits: input is not Hermitian");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho, Eigen::EigenvaluesOnly);
  double s = 0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    double lam = es.eigenvalues()[i];
    if (lam < -1e-10) throw std::domain_error("entropy_bits: negative eigenvalue beyond tolerance");
    if (lam > 1e-300) s -= lam * std::log2(lam);
  }
  return s;
}

double cut_entropy(const StateVector& state, const CutSpec& cut) {
  check_cut(state, cut);
  // use the smaller side for the SVD; entropy is symmetric for pure states
  CutSpec use = cut;
  if (cut.size_a() > state.sites - cut.size_a()) {
    use.mask = ~cut.mask & ((state.sites == 32) ? ~0u : ((1u << state.sites) - 1));
  }
  Eigen::MatrixXcd m = reshape_by_cut(state, use);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  return entropy_from_singular_values(svd.singularValues());
}

std::vector<std::pair<int, double>> entropy_profile(const StateVector& state, int margin) {
  if (margin < 1) margin = 1;
  std::vector<std::pair<int, double>> out;
  for (int c = margin; c <= state.sites - margin; ++c) {
    if (c < 1 || c >= state.sites) continue;
    out.emplace_back(c, cut_entropy(state, CutSpec::prefix(state.sites, c)));
  }
  return out;
}

TMatrix t_matrix(const std::function<int(std::uint64_t)>& phase, int n, const CutSpec& cut) {
  if (cut.sites != n) throw std::domain_error("t_matrix: cut does not match n");
  if (n > 22) throw RefusalError("t_matrix: refusing n > 22");
  int a = cut.size_a(), b = n - a;
  if (a == 0 || b == 0) throw std::domain_error("t_matrix: cut must split the qubits");
  TMatrix t;
  t.n = n;
  t.rows_bits = a;
  t.m.resize(std::int64_t(1) << a, std::int64_t(1) << b);
  // positions of A / B sites, site 1 = most significant bit of x
  std::vector<int> a_shift, b_shift;
  for (int s = 1; s <= n; ++s) (cut.in_a(s) ? a_shift : b_shift).push_back(n - s);
  for (std::int64_t i = 0; i < t.m.rows(); ++i) {
    for (std::int64_t j = 0; j < t.m.cols(); ++j) {
      std::uint64_t x = 0;
      for (std::size_t bi = 0; bi < a_shift.size(); ++bi)
        if ((i >> (a_shift.size() - 1 - bi)) & 1) x |= std::uint64_t(1) << a_shift[bi];
      for (std::size_t bi = 0; bi < b_shift.size(); ++bi)
        if ((j >> (b_shift.size() - 1 - bi)) & 1) x |= std::uint64_t(1) << b_shift[bi];
      t.m(i, j) = phase(x) ? -1.0 : 1.0;
    }
  }
  return t;
}

namespace {

long rank_mod_prime(const Eigen::MatrixXd& m, std::uint64_t p) {
  // work on the transpose if that gives fewer rows
  bool trans = m.rows() > m.cols();
  long rows = trans ? m.cols() : m.rows();
  long cols = trans ? m.rows() : m.cols();
  std::vector<std::vector<std::uint64_t>> a(std::size_t(rows), std::vector<std::uint64_t>(std::size_t(cols)));
  for (long i = 0; i < rows; ++i)
    for (long j = 0; j < cols; ++j) {
      double v = trans ? m(j, i) : m(i, j);
      long long iv = llround(v);
      a[std::size_t(i)][std::size_t(j)] = std::uint64_t((iv % (long long)p + (long long)p) % (long long)p);
    }
  auto mulmod = [p](std::uint64_t x, std::uint64_t y) {
    return std::uint64_t((unsigned __int128)(x)*y % p);
  };
  auto powmod = [&](std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) { if (e & 1) r = mulmod(r, b); b = mulmod(b, b); e >>= 1; }
    return r;
  };
  long rank = 0;
  for (long col = 0; col < cols && rank < rows; ++col) {
    long piv = -1;
    for (long r = rank; r < rows; ++r)
      if (a[std::size_t(r)][std::size_t(col)]) { piv = r; break; }
    if (piv < 0) continue;
    std::swap(a[std::size_t(piv)], a[std::size_t(rank)]);
    std::uint64_t inv = powmod(a[std::size_t(rank)][std::size_t(col)], p - 2);
    for (long r = rank + 1; r < rows; ++r) {
      std::uint64_t f = a[std::size_t(r)][std::size_t(col)];
      if (!f) continue;
      std::uint64_t scale = mulmod(f, inv);
      for (long j = col; j < cols; ++j) {
        std::uint64_t sub = mulmod(scale, a[std::size_t(rank)][std::size_t(j)]);
        std::uint64_t& cell = a[std::size_t(r)][std::size_t(j)];
        cell = (cell >= sub) ? cell - sub : cell + p - sub;
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

long t_rank_exact(const TMatrix& t) {
  static const std::uint64_t p1 = num::prime_in_range((std::uint64_t(1) << 61) - 200, (std::uint64_t(1) << 61));
  static const std::uint64_t p2 = num::prime_in_range((std::uint64_t(1) << 61), (std::uint64_t(1) << 61) + 400);
  return std::max(rank_mod_prime(t.m, p1), rank_mod_prime(t.m, p2));
}

std::pair<double, double> entropy_bounds(const TMatrix& t) {
  // spectral norm of T T^t / 2^n from the Gram matrix of the thin side
  const Eigen::MatrixXd& m = t.m;
  Eigen::MatrixXd gram;
  if (m.rows() <= m.cols()) gram = m * m.transpose();
  else gram = m.transpose() * m;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram, Eigen::EigenvaluesOnly);
  double lam_max = es.eigenvalues().maxCoeff();
  double total = std::pow(2.0, t.n);
  double lower = -std::log2(lam_max / total);
  double upper = std::log2(double(t_rank_exact(t)));
  return {lower, upper};
}

bool cutwise_orthogonal(const StateVector& psi0, const StateVector& psi1, const CutSpec& cut,
                        double tol) {
  if (psi0.sites != psi1.sites || psi0.local_dim != psi1.local_dim)
    throw std::domain_error("cutwise_orthogonal: incompatible states");
  Eigen::MatrixXcd ra0 = reduced_density(psi0, cut), ra1 = reduced_density(psi1, cut);
  if ((ra0 * ra1).norm() > tol) return false;
  CutSpec comp = cut;
  comp.mask = ~cut.mask & ((psi0.sites == 32) ? ~0u : ((1u << psi0.sites) - 1));
  Eigen::MatrixXcd rb0 = reduced_density(psi0, comp), rb1 = reduced_density(psi1, comp);
  return (rb0 * rb1).norm() <= tol;
}

double superposed_entropy(double s0, double s1) { return 0.5 * (s0 + s1) + 1.0; }

double binary_entropy(double x) {
  if (x < 0 || x > 1) throw std::domain_error("binary_entropy: x outside [0,1]");
  double s = 0;
  if (x > 0) s -= x * std::log2(x);
  if (x < 1) s -= (1 - x) * std::log2(1 - x);
  return s;
}

double continuity_bound(double eps, double log_dim_a) {
  if (eps < 0) throw std::domain_error("continuity_bound: eps must be >= 0");
  if (eps == 0) return 0;
  return 2 * eps * log_dim_a + (1 + eps) * binary_entropy(eps / (1 + eps));
}

double entropy_of_branches(const std::vector<Branch>& branches) {
  std::map<std::string, int> rows, cols;
  for (const auto& b : branches) {
    rows.emplace(b.label_a, int(rows.size()));
    cols.emplace(b.label_b, int(cols.size()));
  }
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(long(rows.size()), long(cols.size()));
  for (const auto& b : branches) m(rows[b.label_a], cols[b.label_b]) += b.amp;
  double nrm = m.norm();
  if (nrm < 1e-12) throw std::domain_error("entropy_of_branches: zero state");
  m /= nrm;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  return entropy_from_singular_values(svd.singularValues());
}

}  // namespace pelab::ent
