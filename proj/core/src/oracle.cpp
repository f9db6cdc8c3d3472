#include "nusp/oracle.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace nusp {

// The naive reference works on token-text vectors and spells out the
// factorisation definition directly: x = x1 u1 u2 x2 and y = y1 v1 v2 y2,
// scanning every split point of both words.
namespace {

using Toks = std::vector<std::string>;

Toks to_tokens(const Word& w) {
  Toks out;
  out.reserve(w.size());
  for (Symbol s : w) out.push_back(s.text());
  return out;
}

Word from_tokens(const Toks& toks) {
  std::vector<Symbol> syms;
  syms.reserve(toks.size());
  for (const std::string& t : toks) syms.push_back(Symbol::intern(t));
  return Word(std::move(syms));
}

bool slice_equals(const Toks& w, std::size_t from, const Toks& pattern) {
  if (from + pattern.size() > w.size()) return false;
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    if (w[from + i] != pattern[i]) return false;
  }
  return true;
}

}  // namespace

WordSet naive_splice_all(std::span<const SplicingRule> rules, const WordSet& words) {
  std::vector<Toks> pool;
  pool.reserve(words.size());
  for (const Word& w : words) pool.push_back(to_tokens(w));

  WordSet out;
  for (const SplicingRule& rule : rules) {
    Toks u1 = to_tokens(rule.first_keep);
    Toks u2 = to_tokens(rule.first_cut);
    Toks v1 = to_tokens(rule.second_cut);
    Toks v2 = to_tokens(rule.second_keep);
    for (const Toks& x : pool) {
      for (const Toks& y : pool) {
        for (std::size_t i = 0; i + u1.size() + u2.size() <= x.size(); ++i) {
          if (!slice_equals(x, i, u1) || !slice_equals(x, i + u1.size(), u2)) continue;
          for (std::size_t j = 0; j + v1.size() + v2.size() <= y.size(); ++j) {
            if (!slice_equals(y, j, v1) || !slice_equals(y, j + v1.size(), v2)) continue;
            Toks z(x.begin(), x.begin() + i + u1.size());
            z.insert(z.end(), y.begin() + j + v1.size(), y.end());
            out.insert(from_tokens(z));
          }
        }
      }
    }
  }
  return out;
}

SigmaInstance make_instance(const InstanceParams& params, std::size_t case_index) {
  // Distinct stream per case, replayable across platforms: mt19937_64 with a
  // mixed seed, raw modulo draws.
  std::mt19937_64 rng(params.seed * 0x9e3779b97f4a7c15ULL + case_index + 1);
  auto below = [&](std::size_t n) { return n == 0 ? 0 : rng() % n; };

  std::vector<Symbol> alphabet;
  for (std::size_t i = 0; i < params.alphabet_size; ++i) {
    alphabet.push_back(Symbol::intern(std::string(1, static_cast<char>('a' + i))));
  }
  auto random_word = [&](std::size_t max_len, bool allow_empty) {
    std::size_t len = below(max_len + 1);
    if (!allow_empty && len == 0) len = 1;
    std::vector<Symbol> syms;
    for (std::size_t i = 0; i < len; ++i) syms.push_back(alphabet[below(alphabet.size())]);
    return Word(std::move(syms));
  };
  auto random_component = [&]() {
    double p = static_cast<double>(rng() % 1000) / 1000.0;
    if (p < params.empty_component_probability) return Word{};
    return random_word(params.max_component_length, false);
  };

  SigmaInstance inst;
  std::size_t rule_count = 1 + below(params.max_set_size);
  for (std::size_t i = 0; i < rule_count; ++i) {
    inst.rules.push_back(SplicingRule{random_component(), random_component(),
                                      random_component(), random_component()});
  }
  std::size_t word_count = 1 + below(params.max_set_size);
  for (std::size_t i = 0; i < word_count; ++i) {
    inst.words.insert(random_word(params.max_word_length, true));
  }
  return inst;
}

std::string SigmaMismatch::describe() const {
  std::ostringstream os;
  os << "case " << case_index << " diverges\n";
  os << "rules:\n";
  for (const SplicingRule& r : instance.rules) {
    auto part = [](const Word& w) { return w.empty() ? std::string("~") : w.str(); };
    os << "  [(" << part(r.first_keep) << " , " << part(r.first_cut) << ") ; ("
       << part(r.second_cut) << " , " << part(r.second_keep) << ")]\n";
  }
  os << "words:";
  for (const Word& w : instance.words) os << " {" << w.str() << "}";
  os << "\nnaive:";
  for (const Word& w : expected) os << " {" << w.str() << "}";
  os << "\nactual:";
  for (const Word& w : actual) os << " {" << w.str() << "}";
  os << "\n";
  return os.str();
}

std::optional<SigmaMismatch> differential_splice_check(const InstanceParams& params,
                                                       std::size_t cases,
                                                       const SigmaFn& candidate) {
  for (std::size_t i = 0; i < cases; ++i) {
    SigmaInstance inst = make_instance(params, i);
    WordSet expected = naive_splice_all(inst.rules, inst.words);
    WordSet actual = candidate(inst.rules, inst.words);
    if (expected != actual) {
      return SigmaMismatch{i, std::move(inst), std::move(expected), std::move(actual)};
    }
  }
  return std::nullopt;
}

std::optional<SigmaMismatch> differential_splice_check(const InstanceParams& params,
                                                       std::size_t cases) {
  return differential_splice_check(params, cases,
                                   [](std::span<const SplicingRule> rules,
                                      const WordSet& words) {
                                     return splice_all(rules, words);
                                   });
}

// ---- equivalence ----

namespace {

void enumerate_words(const std::vector<Symbol>& alphabet, std::size_t max_len,
                     std::vector<Word>& out) {
  out.emplace_back();
  std::size_t level_begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (Symbol s : alphabet) {
        Word w = out[i];
        w.append(Word({s}));
        out.push_back(std::move(w));
      }
    }
    level_begin = level_end;
  }
}

}  // namespace

EquivalenceReport equivalence_check(const TuringMachine& m, const CompiledNetwork& cn,
                                    const EquivalenceOptions& options) {
  EquivalenceReport report;
  {
    std::ostringstream id;
    id << "machine[" << m.initial_state << "," << m.transitions.size() << "t,"
       << m.states.size() << "q]";
    report.machine_id = id.str();
  }

  std::vector<Symbol> alphabet(m.input_alphabet.begin(), m.input_alphabet.end());
  std::sort(alphabet.begin(), alphabet.end(), SymbolTextLess{});
  std::vector<Word> words;
  enumerate_words(alphabet, options.max_word_length, words);

  // Machine side first; the deepest acceptance sizes the network budget.
  std::vector<TmVerdict> machine_verdicts;
  machine_verdicts.reserve(words.size());
  std::size_t max_depth = 1;
  for (const Word& w : words) {
    TmVerdict v = tm_run(m, w, options.machine_step_bound);
    if (v.accepted()) max_depth = std::max(max_depth, v.depth);
    machine_verdicts.push_back(v);
  }

  report.step_budget =
      options.budget_factor * (cn.overhead_slope * max_depth + cn.overhead_intercept);

  RunLimits limits;
  limits.max_steps = report.step_budget;
  RunOptions run_options;
  run_options.threads = options.threads;

  // Envelope fit: intercept from the bootstrap-plus-accept tail, slope as the
  // tightest integer cover over accepted words.
  std::size_t slope = 0;
  std::size_t intercept = 0;

  for (std::size_t i = 0; i < words.size(); ++i) {
    RunResult r = run(cn.network, words[i], limits, run_options);
    const TmVerdict& mv = machine_verdicts[i];
    ++report.words_tested;
    if (mv.accepted() != r.verdict.accepted()) {
      report.mismatches.push_back({words[i], mv, r.verdict});
      continue;
    }
    if (r.verdict.accepted()) {
      report.max_steps_used = std::max(report.max_steps_used, r.verdict.step);
      report.accepted_profile.emplace_back(mv.depth, r.verdict.step);
      if (mv.depth == 0) {
        intercept = std::max(intercept, r.verdict.step);
      } else {
        intercept = std::max(intercept, cn.overhead_intercept);
        if (r.verdict.step > intercept) {
          std::size_t needed = (r.verdict.step - cn.overhead_intercept + mv.depth - 1) /
                               mv.depth;
          slope = std::max(slope, needed);
        }
      }
    }
  }
  report.fitted_slope = slope;
  report.fitted_intercept = intercept;
  return report;
}

FixtureResult communication_fixture_check(
    std::span<const CommunicationFixture> fixtures) {
  for (const CommunicationFixture& f : fixtures) {
    CommunicationResult got = communication_step(f.net, f.before);
    for (std::size_t i = 0; i < f.net.node_count(); ++i) {
      if (got.next.contents[i] != f.expected_after.contents[i]) {
        std::ostringstream os;
        os << f.name << ": node '" << f.net.node_names[i] << "' expected {";
        for (const Word& w : f.expected_after.contents[i]) os << " " << w.str();
        os << " } got {";
        for (const Word& w : got.next.contents[i]) os << " " << w.str();
        os << " }";
        return {false, os.str()};
      }
    }
    if (got.lost != f.expected_lost) {
      std::ostringstream os;
      os << f.name << ": lost set expected {";
      for (const Word& w : f.expected_lost) os << " " << w.str();
      os << " } got {";
      for (const Word& w : got.lost) os << " " << w.str();
      os << " }";
      return {false, os.str()};
    }
  }
  return {true, ""};
}

}  // namespace nusp
