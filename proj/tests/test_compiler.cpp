#include <algorithm>

#include "doctest.h"
#include "nusp/compiler.hpp"
#include "nusp/formats.hpp"
#include "nusp/oracle.hpp"
#include "nusp/runtime.hpp"
#include "sample_machines.hpp"

using namespace nusp;

namespace {

Word W(const char* text) { return Word::tokens(text); }
Symbol S(const char* t) { return Symbol::intern(t); }

TuringMachine chain_machine(std::size_t transitions) {
  TuringMachine m;
  Symbol a = S("a"), B = S("B");
  m.input_alphabet = {a};
  m.tape_alphabet = {a, B};
  m.blank = B;
  for (std::size_t i = 0; i <= transitions; ++i) {
    m.states.push_back("q" + std::to_string(i));
  }
  m.initial_state = "q0";
  m.accepting = {"q" + std::to_string(transitions)};
  for (std::size_t i = 0; i < transitions; ++i) {
    m.transitions.push_back(
        {"q" + std::to_string(i), a, "q" + std::to_string(i + 1), a, HeadMove::right});
  }
  return m;
}

bool left_family(Symbol s) {
  const std::string& t = s.text();
  return t == "<" || t.rfind("<^{", 0) == 0;
}

bool right_family(Symbol s) {
  const std::string& t = s.text();
  return t == ">" || t == ">'" || t.rfind(">'{", 0) == 0;
}

bool scaffold(Symbol s) {
  const std::string& t = s.text();
  return t == "E" || t == "G" || t == "J" || t == "K";
}

// Trace-level invariants of compiled runs: exactly one left and one right
// marker per live word, no scaffold symbols, and one origin symbol once the
// word has entered the working form.
void check_word_shape(const Word& w) {
  std::size_t lefts = 0, rights = 0, origins = 0;
  for (Symbol s : w) {
    lefts += left_family(s);
    rights += right_family(s);
    origins += s.text() == "$";
    CHECK_FALSE(scaffold(s));
  }
  CHECK(lefts == 1);
  CHECK(rights == 1);
  bool working = w.size() > 0 && right_family(w[w.size() - 1]) &&
                 w[w.size() - 1].text() != ">";
  CHECK(origins == (working ? 1 : 0));
}

void check_compiled_trace(const CompiledNetwork& cn, const Word& input,
                          std::size_t max_steps) {
  RunLimits limits;
  limits.max_steps = max_steps;
  RunOptions options;
  options.record_contents = true;
  RunResult r = run(cn.network, input, limits, options);
  for (const TraceEvent& e : r.trace.events) {
    REQUIRE(e.contents.has_value());
    for (const WordSet& node : *e.contents) {
      for (const Word& w : node) check_word_shape(w);
    }
  }
}

}  // namespace

TEST_CASE("node count follows the size law") {
  for (std::size_t n = 1; n <= 10; ++n) {
    CompiledNetwork cn = compile(chain_machine(n));
    CHECK(cn.network.node_count() == 2 * n + 4);
    CHECK(validate(cn.network).ok());
  }
}

TEST_CASE("compiling needs transitions") {
  TuringMachine m = chain_machine(1);
  m.transitions.clear();
  CHECK_THROWS_AS(compile(m), compile_error);
}

TEST_CASE("duplicate transitions collapse before counting") {
  TuringMachine m = chain_machine(2);
  m.transitions.push_back(m.transitions.front());
  CompiledNetwork cn = compile(m);
  CHECK(cn.network.node_count() == 2 * 2 + 4);
}

TEST_CASE("tape symbols must not collide with generated markers") {
  TuringMachine m = chain_machine(1);
  m.tape_alphabet.insert(S("$"));
  CHECK_THROWS_AS(compile(m), compile_error);
}

TEST_CASE("encode_input matches the initial configuration") {
  CompiledNetwork cn = compile(samples::even_as());
  CHECK(encode_input(cn, W("a b")) == W("< a b >"));
  CHECK(encode_input(cn, Word{}) == W("< >"));
  CHECK_THROWS_AS(encode_input(cn, W("B")), std::invalid_argument);

  Configuration c0 = initial_configuration(cn.network, W("a b"));
  CHECK(c0.contents[cn.network.input_node] == WordSet{encode_input(cn, W("a b"))});
}

TEST_CASE("legend covers every symbol beyond the input alphabet and blank") {
  CompiledNetwork cn = compile(samples::anbn());
  const TuringMachine m = samples::anbn();
  for (Symbol s : cn.network.network_alphabet) {
    if (m.input_alphabet.count(s) || s == m.blank) continue;
    CAPTURE(s.text());
    CHECK(cn.symbol_legend.count(s) == 1);
  }
}

TEST_CASE("explain lists one role line per node") {
  CompiledNetwork cn = compile(chain_machine(1));
  CHECK(cn.network.node_count() == 6);
  std::string text = explain(cn);
  for (const std::string& name : cn.network.node_names) {
    CHECK(text.find("\n  " + name + ": ") != std::string::npos);
  }
  // two transition-pair sections per transition
  CompiledNetwork two = compile(chain_machine(2));
  std::string two_text = explain(two);
  CHECK(two_text.find("node t1F") != std::string::npos);
  CHECK(two_text.find("node t2B") != std::string::npos);
}

TEST_CASE("bootstrap produces the working form after two splicing steps") {
  CompiledNetwork cn = compile(samples::even_as());
  for (const char* input : {"", "a", "a b", "b a a"}) {
    RunLimits limits;
    RunOptions options;
    options.record_contents = true;
    Word w = W(input);
    RunResult r = run(cn.network, w, limits, options);
    REQUIRE(r.trace.events.size() >= 3);

    // configuration right after the second splicing transition
    const TraceEvent& after = r.trace.events[2];
    REQUIRE(after.contents.has_value());
    Word expected({S("<^{e,F}")});
    expected.append(w);
    expected.append(W("B $ >'"));
    const WordSet& in_node = (*after.contents)[cn.network.input_node];
    CAPTURE(input);
    CHECK(in_node.count(expected) == 1);
  }
}

TEST_CASE("compiled runs keep the marker discipline") {
  CompiledNetwork even = compile(samples::even_as());
  check_compiled_trace(even, W("a a"), 200);
  check_compiled_trace(even, W("a"), 200);
  CompiledNetwork pal = compile(samples::palindrome());
  check_compiled_trace(pal, W("a b a"), 600);
  CompiledNetwork ab = compile(samples::anbn());
  check_compiled_trace(ab, W("a b"), 600);
}

TEST_CASE("splice and communication transitions agree with a naive recomputation") {
  CompiledNetwork cn = compile(samples::even_as());
  Word input = W("a a");
  RunLimits limits;
  RunOptions options;
  options.record_contents = true;
  RunResult r = run(cn.network, input, limits, options);
  REQUIRE(r.verdict.accepted());

  const Network& net = cn.network;
  Configuration current = initial_configuration(net, input);
  auto adjacency = net.adjacency();
  for (const TraceEvent& e : r.trace.events) {
    REQUIRE(e.contents.has_value());
    Configuration next;
    next.contents = *e.contents;
    if (e.kind == StepKind::splice) {
      for (std::size_t i = 0; i < net.node_count(); ++i) {
        WordSet pool = current.contents[i];
        pool.insert(net.processors[i].axioms.begin(), net.processors[i].axioms.end());
        WordSet expected = naive_splice_all(net.processors[i].rules, pool);
        CHECK(next.contents[i] == expected);
      }
    } else {
      for (std::size_t i = 0; i < net.node_count(); ++i) {
        WordSet expected;
        for (const Word& w : current.contents[i]) {
          if (!passes(w, net.processors[i].filter)) expected.insert(w);
        }
        for (std::size_t j : adjacency[i]) {
          for (const Word& w : current.contents[j]) {
            if (passes(w, net.processors[j].filter) &&
                passes(w, net.processors[i].filter)) {
              expected.insert(w);
            }
          }
        }
        CHECK(next.contents[i] == expected);
      }
    }
    current = std::move(next);
  }
}

TEST_CASE("accepted runs stop at the first non-empty halt node") {
  CompiledNetwork cn = compile(samples::even_as());
  RunLimits limits;
  RunOptions options;
  options.record_contents = true;
  RunResult r = run(cn.network, W("a a"), limits, options);
  REQUIRE(r.verdict.accepted());
  CHECK(r.verdict.step == r.trace.events.size());
  for (std::size_t i = 0; i + 1 < r.trace.events.size(); ++i) {
    CHECK((*r.trace.events[i].contents)[cn.network.halt_node].empty());
  }
  CHECK_FALSE(
      (*r.trace.events.back().contents)[cn.network.halt_node].empty());
}

TEST_CASE("equivalence smoke test on short words") {
  TuringMachine m = samples::even_as();
  CompiledNetwork cn = compile(m);
  EquivalenceOptions options;
  options.max_word_length = 3;
  EquivalenceReport report = equivalence_check(m, cn, options);
  CHECK(report.words_tested == 15);
  CHECK(report.mismatches.empty());
  CHECK(report.fitted_slope <= cn.overhead_slope);
  CHECK(report.fitted_intercept <= cn.overhead_intercept);
}

TEST_CASE("a corrupted network is caught by the equivalence check") {
  TuringMachine m = samples::even_as();
  CompiledNetwork cn = compile(m);
  auto sim = cn.network.find_node("Sim");
  REQUIRE(sim.has_value());
  REQUIRE_FALSE(cn.network.processors[*sim].rules.empty());
  cn.network.processors[*sim].rules.erase(cn.network.processors[*sim].rules.begin());
  EquivalenceOptions options;
  options.max_word_length = 2;
  EquivalenceReport report = equivalence_check(m, cn, options);
  CHECK_FALSE(report.mismatches.empty());
}

TEST_CASE("compiled network files round-trip") {
  CompiledNetwork cn = compile(samples::even_as());
  std::string emitted = emit_compiled_network(cn);
  auto parsed = parse_network(emitted);
  REQUIRE(parsed.ok());
  CHECK(emit_network(*parsed.value) == emit_network(cn.network));
  // the legend rides along as comments
  CHECK(emitted.find("# symbol") != std::string::npos);
}
