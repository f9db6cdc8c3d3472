#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nusp/filter.hpp"
#include "nusp/splice.hpp"

namespace nusp {

// A processor whose input and output filter coincide. Axioms take part in
// every splicing step but are never stored in a configuration.
struct UniformProcessor {
  std::vector<SplicingRule> rules;
  WordSet axioms;
  Filter filter;
};

// What a splicing step keeps. The literal rule keeps only spliced products;
// preserve additionally carries the previous contents over.
enum class Persistence { literal, preserve };

struct Network {
  SymbolSet input_alphabet;    // V
  SymbolSet network_alphabet;  // U, with V as a subset
  Symbol left_marker;          // wraps the input word on the left
  Symbol right_marker;         // and on the right
  std::vector<std::string> node_names;  // declaration order, drives output
  std::vector<UniformProcessor> processors;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // undirected
  std::size_t input_node = 0;
  std::size_t halt_node = 0;
  Persistence persistence = Persistence::literal;

  std::size_t node_count() const { return node_names.size(); }
  std::optional<std::size_t> find_node(const std::string& name) const;
  // adjacency()[i] lists neighbours of node i in ascending order.
  std::vector<std::vector<std::size_t>> adjacency() const;
};

struct ValidationReport {
  std::vector<std::string> violations;
  std::vector<std::string> warnings;
  bool ok() const { return violations.empty(); }
};

// Reports every structural violation: marker inside the input alphabet,
// self-loops, edges to unknown nodes, overlapping permit/forbid sets, input
// node equal to halt node, symbols outside the network alphabet. Empty
// permitting or forbidding sets are warnings.
ValidationReport validate(const Network& net);

}  // namespace nusp
