#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "pelab/errors.hpp"

namespace pelab::tm {

// Per-track glyphs. Every track uses 0..3; arrows/states start at 4.
//   track 0:      AR/AL during initialization, CR/CL during computation
//   tracks 1..k:  AR/AL
//   track k+1:    state markers (4 + q), then primed right-states
//   track k+2:    original tape symbols (4 + sym)
enum Glyph : std::uint8_t {
  G_LEND = 0,   // left endpoint
  G_REND = 1,   // right endpoint
  G_BLANK = 2,  // '.'  blank to the right of the marker
  G_USED = 3,   // '#'  blank to the left of the marker
  G_AR = 4,     // '>' plain right arrow
  G_AL = 5,     // '<' plain left arrow
  G_CR = 6,     // computation-phase head, moving right
  G_CL = 7,     // computation-phase head, moving left
  G_FIRST_STATE = 4,
};

struct TmBranch {
  int q2 = 0;
  int write = 0;
  int dir = 0;  // 0 = left, 1 = right
  std::complex<double> amp{1.0, 0.0};
};

// The machine being simulated. Classical machines have at most one branch per
// (state, symbol) with amplitude 1; quantum machines may branch, and their
// transition operator must be an isometry on the reachable configurations.
struct OriginalTM {
  int num_states = 0;
  int num_symbols = 0;
  bool quantum = false;
  // delta[q][a] -> branches (empty = no transition; the marker freezes)
  std::vector<std::vector<std::vector<TmBranch>>> delta;

  const std::vector<TmBranch>& branches(int q, int a) const {
    return delta.at(std::size_t(q)).at(std::size_t(a));
  }
};

OriginalTM classical_cycle_tm(int num_symbols);  // one state, writes a+1 mod sigma, moves right
OriginalTM quantum_hadamard_tm();                // one state, Hadamard-writes the cell, moves right

struct MachineLayout {
  int n = 0;  // interior cells
  int k = 0;  // clock tracks 1..k (track 0 is the head); k in {1, 2}
  OriginalTM original;

  int tracks() const { return k + 3; }
  int sites() const { return n + 2; }
  int state_track() const { return k + 1; }
  int tape_track() const { return k + 2; }

  // glyph helpers for the state track
  std::uint8_t state_glyph(int q) const { return std::uint8_t(G_FIRST_STATE + q); }
  std::uint8_t primed_glyph(int q) const {
    return std::uint8_t(G_FIRST_STATE + original.num_states + q);
  }
  bool is_state(std::uint8_t g) const {
    return g >= G_FIRST_STATE && g < G_FIRST_STATE + original.num_states;
  }
  bool is_primed(std::uint8_t g) const {
    return g >= G_FIRST_STATE + original.num_states &&
           g < G_FIRST_STATE + 2 * original.num_states;
  }
  std::uint8_t tape_glyph(int a) const { return std::uint8_t(G_FIRST_STATE + a); }

  int track_dim(int track) const;  // alphabet size of a track
  std::int64_t site_dim() const;   // product over tracks
};

// One configuration: sites x tracks glyph bytes, site-major.
using Config = std::string;

inline std::uint8_t cfg_get(const MachineLayout& l, const Config& c, int site, int track) {
  return std::uint8_t(c[std::size_t(site) * std::size_t(l.tracks()) + std::size_t(track)]);
}
inline void cfg_set(const MachineLayout& l, Config& c, int site, int track, std::uint8_t g) {
  c[std::size_t(site) * std::size_t(l.tracks()) + std::size_t(track)] = char(g);
}

Config initial_config(const MachineLayout& layout, const std::vector<int>& input);

struct Violation {
  int site = 0;
  int track = 0;
  std::string what;
};

// Empty iff the configuration is valid: endpoints in place, every clock track
// of the form used* arrow blank*, exactly one state marker, tape symbols sane.
std::vector<Violation> validate(const MachineLayout& layout, const Config& config);

// One intrinsic machine step. Empty result = halted (the turn at the right
// end is blocked once track k's arrow points right at cell n). Classical
// machines return one branch of amplitude 1.
std::vector<std::pair<Config, std::complex<double>>> step_intrinsic(const MachineLayout& layout,
                                                                    const Config& config);

// --- rule tables -----------------------------------------------------------

// A local rewrite rule: clock-track patterns on a two-site window, plus a
// direction tag telling the engine which simulation-track action to attach.
//   kind none  = turn rules, no action on tracks k+1, k+2
//   kind right = head moved window[0] -> window[1]
//   kind left  = head moved window[1] -> window[0]
enum class RuleKind { none, right, left };

// Simulation-track action attached to a movement rule, decomposed into
// disjoint local cases. Each case constrains some (track, cell) glyphs of the
// window and rewrites them per branch (quantum machines branch with
// amplitudes; everything else is a single branch of amplitude 1).
struct TmCaseConstraint {
  int track = 0;
  int cell = 0;  // 0 or 1 within the window
  std::uint8_t glyph = 0;
};
struct TmCaseBranch {
  std::vector<TmCaseConstraint> writes;
  std::complex<double> amp{1.0, 0.0};
};
struct TmCase {
  std::vector<TmCaseConstraint> domain;
  std::vector<TmCaseBranch> branches;
};

// All cases for a window whose left site is c0. The Hamiltonian builder uses
// the same tables, so the dynamics and the energy terms cannot drift apart.
std::vector<TmCase> tm_cases(const MachineLayout& layout, RuleKind kind, int c0);

struct Rule {
  int window = 0;  // left site of the (window, window+1) pair
  RuleKind kind = RuleKind::none;
  // glyphs at (track 0..k) x (cell 0,1), before and after
  std::vector<std::uint8_t> before, after;

  std::string signature() const;
};

struct RuleSet {
  MachineLayout layout;
  std::vector<Rule> rules;
  // clock-track contents per time step (interior cells of tracks 0..k),
  // doubling as the clock-value decoder table
  std::vector<std::string> clock_trace;

  long total_steps() const { return long(clock_trace.size()) - 1; }
};

// Simulates the clock once and collects the deduplicated local rewrite rules.
// Ruleset and initial configuration for input w*.
std::pair<RuleSet, Config> build_clock_machine(int n, int k, const OriginalTM& original,
                                               const std::vector<int>& input);

// Table-driven step. Exactly one rule must match a valid non-halted basis
// configuration; nondeterminism throws.
std::vector<std::pair<Config, std::complex<double>>> step_rule(const RuleSet& rules,
                                                               const Config& config);

using Superposition = std::unordered_map<Config, std::complex<double>>;

struct StepResult {
  Superposition next;
  bool halted = false;  // some basis state had no applicable rule
};

StepResult step(const RuleSet& rules, const Superposition& s);

std::vector<Superposition> run_history(const RuleSet& rules, const Config& init, long t_max);

// Clock value of a configuration: its index in the clock trace.
long clock_value(const RuleSet& rules, const Config& config);

// Exact halting time (number of steps until no rule applies).
long halting_time(int n, int k, const OriginalTM& original);

// Least-squares slope of log T against log n over n = n_lo..n_hi.
struct RuntimeFit {
  std::vector<std::pair<int, long>> counts;
  double exponent = 0;
};
RuntimeFit predicted_runtime(int k, int n_lo, int n_hi, const OriginalTM& original);

// Interior glyphs of one track as a compact string:
// '.' blank, '#' used, 'r'/'l' plain arrows, 'R'/'L' computation head,
// states as 'A'+q, primed states as 'a'+q, tape symbols as '0'+a.
std::string render_track(const MachineLayout& layout, const Config& config, int track);

}  // namespace pelab::tm
