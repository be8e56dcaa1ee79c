#pragma once

#include <string>
#include <vector>

#include "pelab/dilution.hpp"
#include "pelab/phase.hpp"

namespace pelab::tm {

// Symbolic tape cell of the pipeline: the input-dependent content is kept as
// placeholders so one simulation covers every branch x of the superposition.
struct SymCell {
  enum Kind { blank, input_bit, output_bit } kind = blank;
  int index = 0;  // which input bit, for input_bit
};

enum class PipelinePhase { superpose, compute, dilute, pad };

struct PipelineSnapshot {
  long t = 0;
  PipelinePhase phase = PipelinePhase::superpose;
  std::vector<SymCell> input_track;   // length tape_len
  bool output_written = false;        // the single output cell
  // everything input-independent, rendered as an opaque string: machine
  // state/head, work counter, loop counter, padding counter, pattern track
  std::string aux;
};

struct PipelineResult {
  int n = 0;
  int tape_len = 0;
  std::vector<PipelineSnapshot> history;
  std::vector<int> slots;  // final positions of the input bits
};

// Four phases: Hadamard superposition, reversible phase-function computation
// (the transformation itself is a pluggable oracle; its tape footprint is a
// work counter), dilution via the single-bit movement machine, and an empty
// padding loop of pad_steps decrements.
PipelineResult phase_pipeline(const phase::PhaseOracle& oracle, int tape_len, long pad_steps);

// Concrete tape labels for branch x of a snapshot: input cells as '0'/'1'/'_',
// the output cell as s(x). Cells [0, cut) go to label A, the rest plus the
// aux string to label B.
std::pair<std::string, std::string> materialize_branch(const phase::PhaseOracle& oracle,
                                                       const PipelineSnapshot& snap,
                                                       std::uint64_t x, int cut);

}  // namespace pelab::tm
