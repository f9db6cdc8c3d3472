#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>

#include "nusp/network.hpp"
#include "nusp/turing.hpp"

namespace nusp {

class compile_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A network together with the bookkeeping needed to read its runs: what each
// generated symbol means, what each node does, and the stepping overhead the
// construction guarantees relative to the machine it simulates.
struct CompiledNetwork {
  Network network;
  std::map<Symbol, std::string> symbol_legend;       // every symbol outside sigma+blank
  std::map<std::string, std::string> node_legend;    // node name -> role
  Persistence persistence = Persistence::literal;

  // Accepting runs take at most overhead_slope * depth + overhead_intercept
  // configuration steps, where depth is the machine's accepting depth.
  std::size_t overhead_slope = 0;
  std::size_t overhead_intercept = 0;
};

// Builds the simulating network: one In, Sim, Res and Halt node plus a pair
// of nodes per transition (head-at-front and head-at-back variants), so
// 2*|transitions| + 4 nodes. Throws compile_error when the machine has no
// transitions or a tape symbol collides with a generated marker token.
CompiledNetwork compile(const TuringMachine& m,
                        Persistence persistence = Persistence::literal);

// The word the network starts from, markers included; identical to what
// initial_configuration places in the input node.
Word encode_input(const CompiledNetwork& cn, const Word& w);

// Human-readable dump: node roles, per-node rules, axioms and filters, and
// the symbol legend.
std::string explain(const CompiledNetwork& cn);

}  // namespace nusp
