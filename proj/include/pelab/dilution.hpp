#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pelab/errors.hpp"

namespace pelab::tm {

// Reversible single-bit movement machine with the looping counter.
//
// The pattern track marks the target slots floor(k * tape_len / n_bits) for
// k = 0..n_bits-1 and flags the last cell; each pass picks the rightmost
// unmoved token and parks it at the rightmost free mark, and the counter
// track (binary, little-endian) repeats the pass exactly n_bits times.
//
// Input cells hold opaque tokens (0 = blank), so the same machine moves
// concrete bits and symbolic placeholders alike; the walk never inspects a
// token's value, only blank vs non-blank.
class DilutionMachine {
 public:
  enum Pattern : std::uint8_t { P_NONE = 0, P_MARK = 1, P_END = 2, P_MARK_END = 3 };
  enum State : std::uint8_t {
    S_SEEK_GAP,    // right until the first blank input cell (or the end flag)
    S_PICK,        // take the token under the head into the register
    S_SEEK_STOP,   // right until a non-blank cell or the end flag
    S_SEEK_MARK,   // left until a pattern mark; drop the register there
    S_RETURN,      // left to the leftmost cell
    S_DEC,         // reversible binary decrement of the counter
    S_DEC_RETURN,  // left to the leftmost cell
    S_ZERO_SCAN,   // right over zero counter cells
    S_NEXT_PASS,   // nonzero counter found: back to the left end, next pass
    S_PARK,        // counter exhausted: back to the left end and stop
    S_HALT,
  };

  DilutionMachine(int n_bits, int tape_len);

  void load(const std::vector<int>& tokens);  // n_bits tokens, all nonzero

  const std::vector<std::uint8_t>& pattern() const { return pattern_; }
  const std::vector<int>& input() const { return input_; }
  std::vector<int> mark_positions() const;

  bool halted() const { return state_ == S_HALT; }
  bool step();             // one move; false once halted
  long run(long max_steps);  // returns steps taken

  std::string config_string() const;  // full configuration, for injectivity scans

  State state() const { return state_; }
  int pos() const { return pos_; }

  // Explicit transition table: one line per (state, reads, position flags),
  // derived from the step logic itself.
  std::vector<std::string> rules() const;

 private:
  struct Reads {
    int input;               // 0 = blank
    std::uint8_t pattern;
    std::uint8_t counter;    // 0 none, 1 zero digit, 2 one digit
    bool at_left, at_virtual;
  };
  struct Move {
    State next;
    int write_input;         // -1 keep
    std::uint8_t write_counter;  // 0 keep
    int dpos;                // -1, 0, +1
    int set_register;        // -2 keep, -1 clear, >=0 take input cell
    bool drop_register;
  };
  Move decide(State s, const Reads& r) const;

  int n_bits_, tape_len_;
  std::vector<int> input_;
  std::vector<std::uint8_t> pattern_;
  std::vector<std::uint8_t> counter_;  // little-endian digits; 1 = zero, 2 = one
  State state_ = S_SEEK_GAP;
  int pos_ = 0;
  int register_ = 0;  // 0 = empty
};

// criterion fixture: positions of the marks for (n_bits, tape_len)
std::vector<int> dilution_slots(int n_bits, int tape_len);

}  // namespace pelab::tm
