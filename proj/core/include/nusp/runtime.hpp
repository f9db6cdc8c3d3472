#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nusp/network.hpp"

namespace nusp {

// Node contents at one moment. Axioms never appear here.
struct Configuration {
  std::vector<WordSet> contents;

  friend bool operator==(const Configuration&, const Configuration&) = default;
};

// Caps that turn runaway runs into diagnostics instead of memory exhaustion;
// rules with empty cut sites make one splicing step quadratic in set size.
struct RunLimits {
  std::size_t max_steps = 100000;
  std::size_t max_word_length = 10000;
  std::size_t max_words_per_node = 100000;
};

enum class VerdictKind {
  accepted,
  step_limit_reached,
  resource_limit_reached,
  cycle_detected,
  exhausted,
};

struct Verdict {
  VerdictKind kind = VerdictKind::step_limit_reached;
  // For accepted: the first configuration index with a non-empty halt node,
  // which is the time measure of the run. For the rest: the index where the
  // run was cut off.
  std::size_t step = 0;

  bool accepted() const { return kind == VerdictKind::accepted; }
  friend bool operator==(const Verdict&, const Verdict&) = default;
};

std::string to_string(VerdictKind kind);

enum class StepKind { splice, communicate };

// One transition. Even indices are splicing transitions, odd communication.
// node_sizes describe the configuration the transition produced.
struct TraceEvent {
  std::size_t index = 0;
  StepKind kind = StepKind::splice;
  std::vector<std::size_t> node_sizes;
  std::size_t lost = 0;
  std::optional<std::vector<WordSet>> contents;  // set when tracing full
  std::optional<WordSet> lost_words;

  friend bool operator==(const TraceEvent&, const TraceEvent&) = default;
};

struct Trace {
  std::vector<TraceEvent> events;

  friend bool operator==(const Trace&, const Trace&) = default;
};

struct RunOptions {
  unsigned threads = 1;        // per-step node evaluation fan-out
  bool record_contents = false;
};

struct RunResult {
  Verdict verdict;
  Trace trace;
};

// Input word wrapped in markers at the input node, everything else empty.
// Throws std::invalid_argument when w strays outside the input alphabet.
Configuration initial_configuration(const Network& net, const Word& w);

// One splicing step under the network's persistence rule.
Configuration splicing_step(const Network& net, const Configuration& c);

struct CommunicationResult {
  Configuration next;
  WordSet lost;
};

// One communication step. A word that passes its node's filter always leaves;
// it lands in every adjacent node whose filter admits it, and is lost when no
// neighbour takes it.
CommunicationResult communication_step(const Network& net, const Configuration& c);

bool is_halting(const Network& net, const Configuration& c);

// Alternates splicing and communication from the initial configuration,
// checking for halting after every transition. Requires validate(net).ok().
RunResult run(const Network& net, const Word& input, const RunLimits& limits,
              const RunOptions& options = {});

struct TimeProfile {
  std::map<std::size_t, std::size_t> steps_by_length;
  std::vector<std::pair<Word, Verdict>> failures;  // non-accepting runs
};

// Empirical time measure: per input length, the maximum accepting step index
// over the supplied words.
TimeProfile time_profile(const Network& net, const std::vector<Word>& words,
                         const RunLimits& limits, const RunOptions& options = {});

}  // namespace nusp
