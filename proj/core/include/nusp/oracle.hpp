#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nusp/compiler.hpp"
#include "nusp/runtime.hpp"
#include "nusp/turing.hpp"

namespace nusp {

// Independent re-implementation of one-step splicing, written over plain
// token-string vectors with explicit factorisation loops. It shares no
// occurrence-enumeration code with splice_all and exists to check it.
WordSet naive_splice_all(std::span<const SplicingRule> rules, const WordSet& words);

// Instance generation bounds for the differential check. Generation is
// deterministic per seed: the same parameters replay the same stream.
struct InstanceParams {
  std::size_t alphabet_size = 3;
  std::size_t max_word_length = 5;
  std::size_t max_set_size = 4;        // bounds both the word set and rule count
  std::size_t max_component_length = 2;
  double empty_component_probability = 0.3;
  std::uint64_t seed = 7;
};

struct SigmaInstance {
  std::vector<SplicingRule> rules;
  WordSet words;
};

SigmaInstance make_instance(const InstanceParams& params, std::size_t case_index);

struct SigmaMismatch {
  std::size_t case_index = 0;
  SigmaInstance instance;
  WordSet expected;  // naive result
  WordSet actual;
  std::string describe() const;
};

using SigmaFn = std::function<WordSet(std::span<const SplicingRule>, const WordSet&)>;

// Compares candidate against naive_splice_all on `cases` generated instances;
// empty result means agreement everywhere.
std::optional<SigmaMismatch> differential_splice_check(const InstanceParams& params,
                                                       std::size_t cases,
                                                       const SigmaFn& candidate);

// Same, with the production implementation as the candidate.
std::optional<SigmaMismatch> differential_splice_check(const InstanceParams& params,
                                                       std::size_t cases);

// ---- machine vs network equivalence ----

struct EquivalenceOptions {
  std::size_t max_word_length = 6;
  std::size_t machine_step_bound = 500;
  std::size_t budget_factor = 4;  // safety factor on the network step budget
  unsigned threads = 1;
};

struct EquivalenceMismatch {
  Word word;
  TmVerdict machine;
  Verdict network;
};

struct EquivalenceReport {
  std::string machine_id;
  std::size_t words_tested = 0;
  std::vector<EquivalenceMismatch> mismatches;
  // Envelope fit over accepted words: steps <= fitted_slope*depth + fitted_intercept.
  std::size_t fitted_slope = 0;
  std::size_t fitted_intercept = 0;
  std::size_t max_steps_used = 0;
  std::size_t step_budget = 0;
  // (machine depth, network steps) per accepted word, in enumeration order.
  std::vector<std::pair<std::size_t, std::size_t>> accepted_profile;

  bool passed() const { return mismatches.empty(); }
};

// Runs every word over the machine's input alphabet up to the length bound
// through both the machine and the compiled network. Network acceptance must
// match machine acceptance; "the network rejects" means no acceptance within
// the linear step budget.
EquivalenceReport equivalence_check(const TuringMachine& m, const CompiledNetwork& cn,
                                    const EquivalenceOptions& options = {});

// ---- communication fixtures ----

struct CommunicationFixture {
  std::string name;
  Network net;
  Configuration before;
  Configuration expected_after;
  WordSet expected_lost;
};

struct FixtureResult {
  bool passed = true;
  std::string diff;  // names the first divergence
};

FixtureResult communication_fixture_check(std::span<const CommunicationFixture> fixtures);

}  // namespace nusp
