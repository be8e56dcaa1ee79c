#pragma once

#include <map>
#include <memory>
#include <optional>

#include "pelab/dcra.hpp"
#include "pelab/lwe.hpp"
#include "pelab/rwise.hpp"
#include "pelab/statevec.hpp"

namespace pelab::phase {

enum class PseudoMode { low, high };

// ---------------------------------------------------------------------------
// Tree construction: a binary tree over the n input bits with lambda-bit
// leaves. Every internal node of level l applies one shared lossy function to
// the concatenation of its children's outputs. Low keys use the lossy branch
// everywhere, high keys the injective branch; an outer 4-wise hash folds the
// root output to one phase bit.
//
// Level widths follow the modulus arithmetic, not the nominal "+lambda bits
// per node": a level with input width m uses the smallest s with N^s >= 2^m,
// so its output width is the bit length of N^{s+1}-1. Moduli are sampled
// among admissible N with phi(N) <= 2^{lambda+1}, which keeps the lossy
// branch's image within 2^{lambda+1} and hence every subtree cut at rank
// <= 2^{lambda+1}.
// ---------------------------------------------------------------------------

struct TreeLevel {
  int in_bits = 0;
  int out_bits = 0;
  dcra::DcraKey key;
};

struct TreeKey {
  int n = 0;       // qubits; power of two
  int lambda = 0;  // leaf width; power of two, >= 2, divides n, < n
  std::vector<TreeLevel> levels;  // level l = 1..log2(n/lambda), shared per level
  hashfam::RwiseKey fin;          // 4-wise, root width -> 1 bit
  std::optional<PseudoMode> mode_hint;  // test-only

  int root_bits() const { return levels.empty() ? n : levels.back().out_bits; }
  std::size_t key_bits() const;
};

// Admissible moduli usable at leaf width lambda (phi(N) <= 2^{lambda+1}).
std::vector<num::BigUint> tree_moduli(int lambda);

TreeKey sample_tree_key(int n, int lambda, PseudoMode mode, num::SeededRng& rng);

// Composed evaluation of the whole tree on an n-bit input.
Bits tree_hash(const TreeKey& key, const Bits& x);

// Evaluation of the subtree on bits [from, from+len) of x (len = 2^l * lambda).
Bits tree_hash_segment(const TreeKey& key, const Bits& x, int from, int len);

int phase_tree(const TreeKey& key, const Bits& x);

// ---------------------------------------------------------------------------
// Chain construction: one shared LWE lossy function plus one pairwise hash
// per stage m = ell..n. Stage m rewrites the m most significant bits i to
// pairwise_m(round(A pad(i))) and recurses on m+1.
// ---------------------------------------------------------------------------

struct ChainKey {
  int n = 0;
  int ell = 0;
  lwe::LweKey a;
  std::vector<hashfam::RwiseKey> hash_keys;  // m = ell..n, pairwise, -> m bits
  hashfam::RwiseKey fin;                     // 4-wise, n -> 1
  std::optional<PseudoMode> mode_hint;

  const hashfam::RwiseKey& hash_for(int m) const { return hash_keys.at(std::size_t(m - ell)); }
};

ChainKey sample_chain_key(int n, int ell, PseudoMode mode, num::SeededRng& rng);

// Z_p vector serialized at 5 bits per coordinate, big-endian, then hashed.
Bits chain_stage(const ChainKey& key, int m, const Bits& prefix);

Bits labelling(const ChainKey& key, const Bits& x);

int phase_chain(const ChainKey& key, const Bits& x);

// ---------------------------------------------------------------------------
// A phase oracle is any total function {0,1}^n -> {0,1}. Tree and chain keys
// are evaluated with per-level caches; explicit tables store all 2^n bits.
// ---------------------------------------------------------------------------

class PhaseOracle {
 public:
  static PhaseOracle from_tree(TreeKey key);
  static PhaseOracle from_chain(ChainKey key);
  static PhaseOracle from_table(int n, std::vector<std::uint8_t> bits);
  static PhaseOracle random(int n, num::SeededRng& rng);

  int n() const { return n_; }
  const char* kind() const;
  int eval(std::uint64_t x) const;

  // all 2^n phase bits (n <= 24)
  std::vector<std::uint8_t> table() const;

  const TreeKey* tree() const { return tree_.get(); }
  const ChainKey* chain() const { return chain_.get(); }

 private:
  int n_ = 0;
  std::shared_ptr<TreeKey> tree_;
  std::shared_ptr<ChainKey> chain_;
  std::shared_ptr<std::vector<std::uint8_t>> table_;
  // per-level value caches for tree evaluation (value -> output bits)
  struct TreeCache;
  std::shared_ptr<TreeCache> cache_;
};

// Phase state: amplitudes (-1)^{s(x)} / 2^{n/2}. In exact form the signs are
// the oracle table itself; this materializes the floating-point vector, n <= 24.
StateVector materialize(const PhaseOracle& oracle);

// Raw phase-table bitstream, 8-byte header ("PELP", version, n, two reserved
// zero bytes) followed by 2^n bits packed LSB-first.
std::vector<std::uint8_t> phase_table_bytes(const PhaseOracle& oracle);
PhaseOracle phase_table_from_bytes(const std::vector<std::uint8_t>& bytes);

}  // namespace pelab::phase
