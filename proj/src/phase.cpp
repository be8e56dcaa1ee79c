#include "pelab/phase.hpp"

#include <cmath>
#include <unordered_map>

namespace pelab::phase {

using num::BigUint;

std::size_t TreeKey::key_bits() const {
  std::size_t bits = 0;
  for (const auto& lvl : levels)
    bits += num::bit_length(lvl.key.N) + num::bit_length(lvl.key.c) + 32;
  return bits + fin.key_bits();
}

std::vector<BigUint> tree_moduli(int lambda) {
  if (lambda < 2) throw std::domain_error("tree_moduli: lambda must be >= 2");
  std::vector<BigUint> out;
  BigUint cap = num::pow_uint(BigUint(2), static_cast<unsigned long>(lambda) + 1);
  // admissible semiprimes with phi(N) <= 2^{lambda+1}; bit widths 4..lambda+3 suffice
  for (int bits = 4; bits <= std::min(lambda + 3, 16); ++bits) {
    for (const auto& m : num::enumerate_rsa_moduli(bits)) {
      BigUint phi = (m.p - 1) * (m.q - 1);
      if (phi <= cap) out.push_back(m.n);
    }
  }
  return out;
}

TreeKey sample_tree_key(int n, int lambda, PseudoMode mode, num::SeededRng& rng) {
  auto pow2 = [](int v) { return v >= 1 && (v & (v - 1)) == 0; };
  if (!pow2(n) || !pow2(lambda) || lambda >= n || n % lambda != 0)
    throw std::domain_error("sample_tree_key: need n, lambda powers of two with lambda | n, lambda < n");
  if (lambda < 2)
    throw std::domain_error(
        "sample_tree_key: lambda = 1 admits no modulus with phi(N) <= 4; use lambda >= 2");

  auto moduli = tree_moduli(lambda);
  if (moduli.empty()) throw std::domain_error("sample_tree_key: no admissible modulus");

  TreeKey key;
  key.n = n;
  key.lambda = lambda;
  key.mode_hint = mode;
  int levels = 0;
  for (int w = n / lambda; w > 1; w /= 2) ++levels;

  int child_out = lambda;  // leaves pass their bits through
  for (int l = 1; l <= levels; ++l) {
    TreeLevel lvl;
    lvl.in_bits = 2 * child_out;
    BigUint N = moduli[rng.below(moduli.size())];
    dcra::DcraParams params;
    params.n = lvl.in_bits;
    params.lambda = int(num::bit_length(N));
    // smallest s with N^s >= 2^{in_bits}
    int s = 1;
    BigUint ns = N;
    BigUint need = num::pow_uint(BigUint(2), static_cast<unsigned long>(lvl.in_bits));
    while (ns < need) { ns *= N; ++s; }
    params.s = s;
    dcra::KeygenHooks hooks;
    hooks.force_N = N;
    lvl.key = dcra::dcra_keygen(params,
                                mode == PseudoMode::low ? LossyMode::lossy : LossyMode::injective,
                                rng, &hooks);
    lvl.out_bits = int(num::bit_length(BigUint(lvl.key.modulus() - 1)));
    lvl.key.out_bits = lvl.out_bits;
    key.levels.push_back(lvl);
    child_out = lvl.out_bits;
  }
  key.fin = hashfam::sample_rwise_key(4, key.root_bits(), 1, rng);
  return key;
}

Bits tree_hash_segment(const TreeKey& key, const Bits& x, int from, int len) {
  if (int(x.size()) != key.n) throw std::domain_error("tree_hash: input width mismatch");
  if (len == key.lambda) return bits_slice(x, from, len);
  int level = 0;
  for (int w = len / key.lambda; w > 1; w /= 2) ++level;
  const TreeLevel& lvl = key.levels.at(std::size_t(level) - 1);
  Bits left = tree_hash_segment(key, x, from, len / 2);
  Bits right = tree_hash_segment(key, x, from + len / 2, len / 2);
  return dcra::dcra_eval(lvl.key, bits_concat(left, right));
}

Bits tree_hash(const TreeKey& key, const Bits& x) { return tree_hash_segment(key, x, 0, key.n); }

int phase_tree(const TreeKey& key, const Bits& x) {
  return eval_rwise(key.fin, tree_hash(key, x))[0];
}

ChainKey sample_chain_key(int n, int ell, PseudoMode mode, num::SeededRng& rng) {
  if (n < 2) throw std::domain_error("sample_chain_key: n must be >= 2");
  if (ell < 1 || ell > n) throw std::domain_error("sample_chain_key: need 1 <= ell <= n");
  ChainKey key;
  key.n = n;
  key.ell = ell;
  key.mode_hint = mode;
  auto params = lwe::lwe_params_for(n, ell);
  key.a = lwe::lwe_keygen(params,
                          mode == PseudoMode::low ? LossyMode::lossy : LossyMode::injective, rng);
  for (int m = ell; m <= n; ++m)
    key.hash_keys.push_back(hashfam::sample_rwise_key(2, 5 * n, m, rng));
  key.fin = hashfam::sample_rwise_key(4, n, 1, rng);
  return key;
}

Bits chain_stage(const ChainKey& key, int m, const Bits& prefix) {
  if (int(prefix.size()) != m) throw std::domain_error("chain_stage: prefix width mismatch");
  Bits padded(std::size_t(key.n - m), 0);  // pad with leading zeros
  padded.insert(padded.end(), prefix.begin(), prefix.end());
  auto rounded = lwe_eval(key.a, padded);
  Bits serialized;
  serialized.reserve(std::size_t(key.n) * 5);
  for (auto coord : rounded) {
    auto b = bits_from_u64(coord, 5);  // ceil(log2 17) bits per coordinate
    serialized.insert(serialized.end(), b.begin(), b.end());
  }
  return eval_rwise(key.hash_for(m), serialized);
}

Bits labelling(const ChainKey& key, const Bits& x) {
  if (int(x.size()) != key.n) throw std::domain_error("labelling: input width mismatch");
  Bits cur = x;
  for (int m = key.ell; m <= key.n; ++m) {
    Bits prefix = bits_slice(cur, 0, m);
    Bits rest = bits_slice(cur, m, key.n - m);
    cur = bits_concat(chain_stage(key, m, prefix), rest);
  }
  return cur;
}

int phase_chain(const ChainKey& key, const Bits& x) {
  return eval_rwise(key.fin, labelling(key, x))[0];
}

// --- oracle ---------------------------------------------------------------

struct PhaseOracle::TreeCache {
  // per level: value of (left || right) input -> output bits
  std::vector<std::unordered_map<std::string, Bits>> levels;
};

PhaseOracle PhaseOracle::from_tree(TreeKey key) {
  PhaseOracle o;
  o.n_ = key.n;
  o.tree_ = std::make_shared<TreeKey>(std::move(key));
  o.cache_ = std::make_shared<TreeCache>();
  o.cache_->levels.resize(o.tree_->levels.size());
  return o;
}

PhaseOracle PhaseOracle::from_chain(ChainKey key) {
  PhaseOracle o;
  o.n_ = key.n;
  o.chain_ = std::make_shared<ChainKey>(std::move(key));
  return o;
}

PhaseOracle PhaseOracle::from_table(int n, std::vector<std::uint8_t> bits) {
  if (n < 1 || n > 24) throw std::domain_error("PhaseOracle::from_table: n out of range");
  if (bits.size() != (std::size_t(1) << n))
    throw std::domain_error("PhaseOracle::from_table: table size mismatch");
  PhaseOracle o;
  o.n_ = n;
  o.table_ = std::make_shared<std::vector<std::uint8_t>>(std::move(bits));
  return o;
}

PhaseOracle PhaseOracle::random(int n, num::SeededRng& rng) {
  if (n < 1 || n > 24) throw std::domain_error("PhaseOracle::random: n out of range");
  std::vector<std::uint8_t> bits(std::size_t(1) << n);
  for (auto& b : bits) b = rng.next_u8() & 1;
  return from_table(n, std::move(bits));
}

const char* PhaseOracle::kind() const {
  if (tree_) return "tree";
  if (chain_) return "chain";
  return "explicit-table";
}

namespace {

// cached bottom-up tree evaluation; one shared function (and cache) per level
Bits tree_eval_cached(const TreeKey& key, PhaseOracle::TreeCache& cache, const Bits& x) {
  int leaves = key.n / key.lambda;
  std::vector<Bits> row;
  row.reserve(std::size_t(leaves));
  for (int i = 0; i < leaves; ++i) row.push_back(bits_slice(x, i * key.lambda, key.lambda));
  for (std::size_t level = 0; level < key.levels.size(); ++level) {
    auto& memo = cache.levels[level];
    const auto& lvl = key.levels[level];
    std::vector<Bits> next;
    next.reserve(row.size() / 2);
    for (std::size_t i = 0; i + 1 < row.size(); i += 2) {
      Bits in = bits_concat(row[i], row[i + 1]);
      std::string k = bits_to_string(in);
      auto it = memo.find(k);
      if (it == memo.end()) it = memo.emplace(k, dcra::dcra_eval(lvl.key, in)).first;
      next.push_back(it->second);
    }
    row = std::move(next);
  }
  return row.at(0);
}

}  // namespace

int PhaseOracle::eval(std::uint64_t x) const {
  if (n_ < 64 && (x >> n_)) throw std::domain_error("PhaseOracle::eval: input too wide");
  if (table_) return (*table_)[std::size_t(x)];
  Bits in = bits_from_u64(x, n_);
  if (tree_) return eval_rwise(tree_->fin, tree_eval_cached(*tree_, *cache_, in))[0];
  return phase_chain(*chain_, in);
}

std::vector<std::uint8_t> PhaseOracle::table() const {
  if (n_ > 24) throw RefusalError("PhaseOracle::table: refusing n > 24");
  std::vector<std::uint8_t> out(std::size_t(1) << n_);
  for (std::uint64_t x = 0; x < out.size(); ++x) out[std::size_t(x)] = std::uint8_t(eval(x));
  return out;
}

StateVector materialize(const PhaseOracle& oracle) {
  int n = oracle.n();
  if (n > 24) throw RefusalError("materialize: refusing n > 24");
  StateVector s = make_state(n, 2);
  double a = std::pow(2.0, -0.5 * n);
  auto bits = oracle.table();
  for (std::int64_t v = 0; v < s.dim(); ++v)
    s.amp[v] = bits[std::size_t(v)] ? -a : a;
  return s;
}

std::vector<std::uint8_t> phase_table_bytes(const PhaseOracle& oracle) {
  auto bits = oracle.table();
  std::vector<std::uint8_t> out(8 + (bits.size() + 7) / 8, 0);
  out[0] = 'P'; out[1] = 'E'; out[2] = 'L'; out[3] = 'P';
  out[4] = 1;  // format version
  out[5] = std::uint8_t(oracle.n());
  for (std::size_t i = 0; i < bits.size(); ++i)
    if (bits[i]) out[8 + i / 8] |= std::uint8_t(1) << (i % 8);
  return out;
}

PhaseOracle phase_table_from_bytes(const std::vector<std::uint8_t>& bytes) {
  if (bytes.size() < 8 || bytes[0] != 'P' || bytes[1] != 'E' || bytes[2] != 'L' || bytes[3] != 'P')
    throw std::domain_error("phase_table_from_bytes: bad magic");
  if (bytes[4] != 1) throw std::domain_error("phase_table_from_bytes: unknown version");
  int n = bytes[5];
  std::size_t count = std::size_t(1) << n;
  if (bytes.size() != 8 + (count + 7) / 8)
    throw std::domain_error("phase_table_from_bytes: truncated table");
  std::vector<std::uint8_t> bits(count);
  for (std::size_t i = 0; i < count; ++i) bits[i] = (bytes[8 + i / 8] >> (i % 8)) & 1;
  return PhaseOracle::from_table(n, std::move(bits));
}

}  // namespace pelab::phase
