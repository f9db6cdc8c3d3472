#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "nusp/network.hpp"

namespace nusp {

enum class HeadMove { left, right };

struct TmTransition {
  std::string from;
  Symbol read;
  std::string to;
  Symbol write;
  HeadMove move = HeadMove::right;

  friend bool operator==(const TmTransition&, const TmTransition&) = default;
};

// Nondeterministic single-tape machine. The tape is one-way infinite to the
// right; a left move at cell 0 kills that branch. Acceptance is by accepting
// state, a halted branch that never reaches one rejects.
struct TuringMachine {
  std::vector<std::string> states;
  SymbolSet input_alphabet;  // blank excluded
  SymbolSet tape_alphabet;   // superset of input alphabet, blank included
  Symbol blank;
  std::vector<TmTransition> transitions;
  std::string initial_state;
  std::set<std::string> accepting;
};

ValidationReport validate(const TuringMachine& m);

// Tape always covers the head; cells beyond it are blank.
struct TmConfiguration {
  std::vector<Symbol> tape;
  std::size_t head = 0;
  std::string state;

  friend bool operator==(const TmConfiguration&, const TmConfiguration&) = default;
};

// One successor per applicable transition. A right move past the end extends
// the tape with a blank.
std::vector<TmConfiguration> tm_successors(const TuringMachine& m,
                                           const TmConfiguration& c);

enum class TmVerdictKind { accepted, rejected, bound_exceeded };

struct TmVerdict {
  TmVerdictKind kind = TmVerdictKind::rejected;
  std::size_t depth = 0;  // set when accepted; minimal accepting depth

  bool accepted() const { return kind == TmVerdictKind::accepted; }
  friend bool operator==(const TmVerdict&, const TmVerdict&) = default;
};

// Breadth-first exploration of configuration sets, merging duplicates.
// Accepts at the first level containing an accepting state, rejects when the
// frontier empties within the bound.
TmVerdict tm_run(const TuringMachine& m, const Word& input, std::size_t step_bound);

}  // namespace nusp
