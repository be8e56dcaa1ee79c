#include "pelab/pipeline.hpp"

#include <stdexcept>

namespace pelab::tm {

namespace {

std::string dilution_aux(const DilutionMachine& m) {
  // everything about the dilution machine except the token values: state,
  // head, counter digits, and the blank structure of the input track
  std::string s = "d:" + std::to_string(int(m.state())) + ":" + std::to_string(m.pos()) + ":";
  for (int v : m.input()) s.push_back(v ? 'x' : '_');
  return s;
}

}  // namespace

PipelineResult phase_pipeline(const phase::PhaseOracle& oracle, int tape_len, long pad_steps) {
  int n = oracle.n();
  if (n > 16) throw RefusalError("phase_pipeline: refusing n > 16");
  if (tape_len < n) throw std::domain_error("phase_pipeline: tape shorter than the input");

  PipelineResult res;
  res.n = n;
  res.tape_len = tape_len;
  res.slots = dilution_slots(n, tape_len);

  std::vector<SymCell> track(std::size_t(tape_len));
  for (int j = 0; j < n; ++j) track[std::size_t(j)] = SymCell{SymCell::input_bit, j};

  long t = 0;
  auto snap = [&](PipelinePhase phase, bool out_written, const std::string& aux) {
    PipelineSnapshot s;
    s.t = t++;
    s.phase = phase;
    s.input_track = track;
    s.output_written = out_written;
    s.aux = aux;
    res.history.push_back(std::move(s));
  };

  // phase 1: the Hadamard sweep put the input register into superposition;
  // symbolically the track now holds one placeholder per input bit
  snap(PipelinePhase::superpose, false, "start");

  // phase 2: reversible computation of s(x). The transformation is a plugged
  // oracle; what the tape sees is a work counter ticking through 2n steps and
  // the output appearing at the end, independent of x on every other cell.
  long compute_steps = 2 * n;
  for (long i = 1; i <= compute_steps; ++i)
    snap(PipelinePhase::compute, i == compute_steps, "work:" + std::to_string(i));

  // phase 3: dilution; the machine moves placeholders without reading them
  DilutionMachine dil(n, tape_len);
  {
    std::vector<int> tokens;
    for (int j = 0; j < n; ++j) tokens.push_back(j + 1);  // token j+1 = input bit j
    dil.load(tokens);
  }
  while (!dil.halted()) {
    if (!dil.step()) break;
    for (int c = 0; c < tape_len; ++c) {
      int v = dil.input()[std::size_t(c)];
      track[std::size_t(c)] = v ? SymCell{SymCell::input_bit, v - 1} : SymCell{};
    }
    snap(PipelinePhase::dilute, true, dilution_aux(dil));
  }

  // phase 4: the empty loop; only the padding counter changes
  for (long i = 1; i <= pad_steps; ++i)
    snap(PipelinePhase::pad, true, "pad:" + std::to_string(i));

  return res;
}

std::pair<std::string, std::string> materialize_branch(const phase::PhaseOracle& oracle,
                                                       const PipelineSnapshot& snap,
                                                       std::uint64_t x, int cut) {
  int n = oracle.n();
  auto cell_char = [&](const SymCell& c) {
    if (c.kind == SymCell::blank) return '_';
    return char('0' + ((x >> (n - 1 - c.index)) & 1));
  };
  std::string a, b;
  for (int i = 0; i < int(snap.input_track.size()); ++i)
    (i < cut ? a : b).push_back(cell_char(snap.input_track[std::size_t(i)]));
  // the output cell sits at the right end of the tape in this layout
  if (snap.output_written) b.push_back(char('0' + oracle.eval(x)));
  b += "|" + snap.aux;
  return {a, b};
}

}  // namespace pelab::tm
