#include "nusp/turing.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace nusp {

ValidationReport validate(const TuringMachine& m) {
  ValidationReport report;
  auto violation = [&](const std::string& msg) { report.violations.push_back(msg); };

  std::set<std::string> state_set(m.states.begin(), m.states.end());
  if (state_set.size() != m.states.size()) violation("duplicate state names");
  if (!state_set.count(m.initial_state)) {
    violation("initial state '" + m.initial_state + "' not declared");
  }
  for (const std::string& s : m.accepting) {
    if (!state_set.count(s)) violation("accepting state '" + s + "' not declared");
  }
  if (m.input_alphabet.count(m.blank)) {
    violation("blank symbol '" + m.blank.text() + "' must not be an input symbol");
  }
  if (!m.tape_alphabet.count(m.blank)) {
    violation("blank symbol '" + m.blank.text() + "' missing from tape alphabet");
  }
  for (Symbol s : m.input_alphabet) {
    if (!m.tape_alphabet.count(s)) {
      violation("input symbol '" + s.text() + "' missing from tape alphabet");
    }
  }
  for (const TmTransition& t : m.transitions) {
    if (!state_set.count(t.from)) violation("transition from unknown state '" + t.from + "'");
    if (!state_set.count(t.to)) violation("transition to unknown state '" + t.to + "'");
    if (!m.tape_alphabet.count(t.read)) {
      violation("transition reads unknown symbol '" + t.read.text() + "'");
    }
    if (!m.tape_alphabet.count(t.write)) {
      violation("transition writes unknown symbol '" + t.write.text() + "'");
    }
  }
  return report;
}

std::vector<TmConfiguration> tm_successors(const TuringMachine& m,
                                           const TmConfiguration& c) {
  std::vector<TmConfiguration> out;
  Symbol read = c.tape[c.head];
  for (const TmTransition& t : m.transitions) {
    if (t.from != c.state || t.read != read) continue;
    if (t.move == HeadMove::left && c.head == 0) continue;  // falls off, branch dies
    TmConfiguration next = c;
    next.tape[c.head] = t.write;
    next.state = t.to;
    if (t.move == HeadMove::right) {
      ++next.head;
      if (next.head == next.tape.size()) next.tape.push_back(m.blank);
    } else {
      --next.head;
    }
    out.push_back(std::move(next));
  }
  return out;
}

namespace {

// Trailing blanks carry no information; trimming them merges configurations
// that differ only in how far the tape was materialised.
void canonicalise(TmConfiguration& c, Symbol blank) {
  while (c.tape.size() > c.head + 1 && c.tape.back() == blank) c.tape.pop_back();
}

std::string key_of(const TmConfiguration& c) {
  std::string key = c.state;
  key += '\x1f';
  key += std::to_string(c.head);
  for (Symbol s : c.tape) {
    key += '\x1f';
    key += std::to_string(s.id());
  }
  return key;
}

}  // namespace

TmVerdict tm_run(const TuringMachine& m, const Word& input, std::size_t step_bound) {
  for (Symbol s : input) {
    if (!m.input_alphabet.count(s)) {
      throw std::invalid_argument("input symbol '" + s.text() +
                                  "' is not in the machine's input alphabet");
    }
  }

  TmConfiguration start;
  start.state = m.initial_state;
  start.head = 0;
  start.tape = input.empty() ? std::vector<Symbol>{m.blank} : input.symbols();

  std::unordered_set<std::string> seen;
  std::vector<TmConfiguration> frontier{start};
  seen.insert(key_of(start));

  for (std::size_t depth = 0;; ++depth) {
    for (const TmConfiguration& c : frontier) {
      if (m.accepting.count(c.state)) return {TmVerdictKind::accepted, depth};
    }
    if (frontier.empty()) return {TmVerdictKind::rejected, depth};
    if (depth == step_bound) return {TmVerdictKind::bound_exceeded, depth};

    std::vector<TmConfiguration> next;
    for (const TmConfiguration& c : frontier) {
      for (TmConfiguration& succ : tm_successors(m, c)) {
        canonicalise(succ, m.blank);
        if (seen.insert(key_of(succ)).second) next.push_back(std::move(succ));
      }
    }
    frontier = std::move(next);
  }
}

}  // namespace nusp
