#include "pelab/dilution.hpp"

#include <stdexcept>

namespace pelab::tm {

std::vector<int> dilution_slots(int n_bits, int tape_len) {
  std::vector<int> out;
  for (int k = 0; k < n_bits; ++k)
    out.push_back(int(std::int64_t(k) * tape_len / n_bits));
  return out;
}

DilutionMachine::DilutionMachine(int n_bits, int tape_len)
    : n_bits_(n_bits), tape_len_(tape_len) {
  if (n_bits < 1) throw std::domain_error("DilutionMachine: n_bits must be >= 1");
  if (tape_len < n_bits || tape_len < 2)
    throw std::domain_error("DilutionMachine: tape_len must be >= max(n_bits, 2)");
  input_.assign(std::size_t(tape_len), 0);
  pattern_.assign(std::size_t(tape_len), P_NONE);
  for (int m : dilution_slots(n_bits, tape_len)) pattern_[std::size_t(m)] = P_MARK;
  pattern_[std::size_t(tape_len - 1)] =
      pattern_[std::size_t(tape_len - 1)] == P_MARK ? P_MARK_END : P_END;
  // counter = n_bits in binary, little-endian; digit glyphs: 1 = "0", 2 = "1"
  int v = n_bits;
  std::size_t cell = 0;
  while (v > 0) {
    if (cell >= std::size_t(tape_len))
      throw std::domain_error("DilutionMachine: tape too short for the loop counter");
    counter_.push_back(std::uint8_t(1 + (v & 1)));
    v >>= 1;
    ++cell;
  }
}

void DilutionMachine::load(const std::vector<int>& tokens) {
  if (int(tokens.size()) != n_bits_) throw std::domain_error("DilutionMachine::load: wrong count");
  for (int t : tokens)
    if (t == 0) throw std::domain_error("DilutionMachine::load: tokens must be nonzero");
  for (int i = 0; i < n_bits_; ++i) input_[std::size_t(i)] = tokens[std::size_t(i)];
}

std::vector<int> DilutionMachine::mark_positions() const {
  return dilution_slots(n_bits_, tape_len_);
}

DilutionMachine::Move DilutionMachine::decide(State s, const Reads& r) const {
  // defaults: keep everything, stay
  Move m{s, -1, 0, 0, -2, false};
  bool endish = r.pattern == P_END || r.pattern == P_MARK_END;
  switch (s) {
    case S_SEEK_GAP:
      if (r.input != 0 && !endish) { m.dpos = +1; return m; }
      if (r.input == 0) { m.next = S_PICK; m.dpos = -1; return m; }
      m.next = S_PICK;  // tape full to the end flag: pick right here
      return m;
    case S_PICK:
      m.set_register = r.input;
      m.write_input = 0;
      m.next = endish ? S_SEEK_MARK : S_SEEK_STOP;
      m.dpos = endish ? 0 : +1;
      return m;
    case S_SEEK_STOP:
      if (r.input == 0 && !endish) { m.dpos = +1; return m; }
      if (r.input != 0) { m.next = S_SEEK_MARK; m.dpos = -1; return m; }
      m.next = S_SEEK_MARK;  // reached the end flag on a blank cell
      return m;
    case S_SEEK_MARK:
      if (r.pattern == P_MARK || r.pattern == P_MARK_END) {
        m.drop_register = true;
        m.next = S_RETURN;
        return m;
      }
      m.dpos = -1;
      return m;
    case S_RETURN:
      if (!r.at_left) { m.dpos = -1; return m; }
      m.next = S_DEC;
      return m;
    case S_DEC:
      if (r.counter == 1) { m.write_counter = 2; m.dpos = +1; return m; }  // borrow 0 -> 1
      if (r.counter == 2) {
        m.write_counter = 1;  // first one-digit -> 0
        m.next = S_DEC_RETURN;
        m.dpos = r.at_left ? 0 : -1;
        return m;
      }
      throw std::logic_error("DilutionMachine: decrement ran past the counter");
    case S_DEC_RETURN:
      if (!r.at_left) { m.dpos = -1; return m; }
      m.next = S_ZERO_SCAN;
      return m;
    case S_ZERO_SCAN:
      if (r.counter == 1) { m.dpos = +1; return m; }
      if (r.counter == 2) {
        m.next = S_NEXT_PASS;
        m.dpos = r.at_left ? 0 : -1;
        return m;
      }
      m.next = S_PARK;  // only zeros left: done
      m.dpos = -1;
      return m;
    case S_NEXT_PASS:
      if (!r.at_left) { m.dpos = -1; return m; }
      m.next = S_SEEK_GAP;
      return m;
    case S_PARK:
      if (!r.at_left) { m.dpos = -1; return m; }
      m.next = S_HALT;
      return m;
    case S_HALT:
      return m;
  }
  throw std::logic_error("DilutionMachine: unreachable");
}

bool DilutionMachine::step() {
  if (state_ == S_HALT) return false;
  Reads r;
  r.at_left = pos_ == 0;
  r.at_virtual = pos_ >= tape_len_;
  r.input = r.at_virtual ? 0 : input_[std::size_t(pos_)];
  r.pattern = r.at_virtual ? P_NONE : pattern_[std::size_t(pos_)];
  r.counter = (r.at_virtual || std::size_t(pos_) >= counter_.size())
                  ? std::uint8_t(0)
                  : counter_[std::size_t(pos_)];
  Move m = decide(state_, r);
  if (m.set_register >= 0) register_ = m.set_register;
  if (m.write_input >= 0) input_[std::size_t(pos_)] = m.write_input;
  if (m.drop_register) {
    if (input_[std::size_t(pos_)] != 0)
      throw std::logic_error("DilutionMachine: drop target occupied");
    input_[std::size_t(pos_)] = register_;
    register_ = 0;
  }
  if (m.write_counter) {
    if (std::size_t(pos_) >= counter_.size())
      throw std::logic_error("DilutionMachine: counter write out of range");
    counter_[std::size_t(pos_)] = m.write_counter;
  }
  state_ = m.next;
  pos_ += m.dpos;
  if (pos_ < 0 || pos_ > tape_len_) throw std::logic_error("DilutionMachine: head off the tape");
  return true;
}

long DilutionMachine::run(long max_steps) {
  long t = 0;
  while (t < max_steps && step()) ++t;
  return t;
}

std::string DilutionMachine::config_string() const {
  std::string s = std::to_string(int(state_)) + "|" + std::to_string(pos_) + "|" +
                  std::to_string(register_) + "|";
  for (int v : input_) s += std::to_string(v) + ",";
  s += "|";
  for (auto c : counter_) s += char('0' + c);
  return s;
}

std::vector<std::string> DilutionMachine::rules() const {
  std::vector<std::string> out;
  const char* names[] = {"seek_gap", "pick",     "seek_stop", "seek_mark", "return", "dec",
                         "dec_ret",  "zero_scan", "next_pass", "park",      "halt"};
  for (int s = S_SEEK_GAP; s <= S_PARK; ++s) {
    for (int inp = 0; inp <= 1; ++inp) {
      for (int pat = 0; pat <= 3; ++pat) {
        for (int ctr = 0; ctr <= 2; ++ctr) {
          for (int left = 0; left <= 1; ++left) {
            Reads r{inp, std::uint8_t(pat), std::uint8_t(ctr), bool(left), false};
            Move m;
            try {
              m = decide(State(s), r);
            } catch (const std::logic_error&) {
              continue;
            }
            std::string line = std::string(names[s]) + " in=" + (inp ? "tok" : "_") +
                               " pat=" + std::to_string(pat) + " ctr=" + std::to_string(ctr) +
                               (left ? " left" : "") + " -> " + names[int(m.next)] +
                               " move=" + std::to_string(m.dpos);
            if (m.write_input == 0) line += " erase";
            if (m.set_register >= 0) line += " grab";
            if (m.drop_register) line += " drop";
            if (m.write_counter) line += " ctr:=" + std::to_string(int(m.write_counter));
            out.push_back(line);
          }
        }
      }
    }
  }
  return out;
}

}  // namespace pelab::tm
