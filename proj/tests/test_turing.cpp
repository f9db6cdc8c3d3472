#include <stdexcept>

#include "doctest.h"
#include "nusp/turing.hpp"
#include "sample_machines.hpp"

using namespace nusp;

namespace {

Word W(const char* text) { return Word::tokens(text); }
Symbol S(const char* t) { return Symbol::intern(t); }

TuringMachine tiny(std::vector<TmTransition> delta, std::set<std::string> accepting) {
  TuringMachine m;
  m.states = {"q0", "q1"};
  m.input_alphabet = {S("a")};
  m.tape_alphabet = {S("a"), S("b"), S("B")};
  m.blank = S("B");
  m.initial_state = "q0";
  m.accepting = std::move(accepting);
  m.transitions = std::move(delta);
  return m;
}

}  // namespace

TEST_CASE("successors follow the single applicable transition") {
  TuringMachine m = tiny({{"q0", S("a"), "q1", S("b"), HeadMove::right}}, {"q1"});
  TmConfiguration c{{S("a")}, 0, "q0"};
  auto succ = tm_successors(m, c);
  REQUIRE(succ.size() == 1);
  CHECK(succ[0].state == "q1");
  CHECK(succ[0].head == 1);
  CHECK(succ[0].tape == std::vector<Symbol>{S("b"), S("B")});  // extended with blank
}

TEST_CASE("no applicable transition means no successors") {
  TuringMachine m = tiny({{"q0", S("b"), "q1", S("b"), HeadMove::right}}, {"q1"});
  TmConfiguration c{{S("a")}, 0, "q0"};
  CHECK(tm_successors(m, c).empty());
}

TEST_CASE("nondeterministic transitions fork") {
  TuringMachine m = tiny({{"q0", S("a"), "q0", S("a"), HeadMove::right},
                          {"q0", S("a"), "q1", S("b"), HeadMove::right}},
                         {"q1"});
  TmConfiguration c{{S("a")}, 0, "q0"};
  CHECK(tm_successors(m, c).size() == 2);
}

TEST_CASE("left moves at cell zero kill the branch") {
  TuringMachine m = tiny({{"q0", S("a"), "q1", S("b"), HeadMove::left}}, {"q1"});
  TmConfiguration c{{S("a")}, 0, "q0"};
  CHECK(tm_successors(m, c).empty());
  CHECK(tm_run(m, W("a"), 10).kind == TmVerdictKind::rejected);
}

TEST_CASE("accepting initial state accepts at depth zero") {
  TuringMachine m = tiny({{"q0", S("a"), "q0", S("a"), HeadMove::right}}, {"q0"});
  CHECK(tm_run(m, W("a"), 10) == TmVerdict{TmVerdictKind::accepted, 0});
  CHECK(tm_run(m, Word{}, 10) == TmVerdict{TmVerdictKind::accepted, 0});
}

TEST_CASE("no transitions and a rejecting start empties the frontier at depth one") {
  TuringMachine m = tiny({}, {"q1"});
  CHECK(tm_run(m, W("a"), 10) == TmVerdict{TmVerdictKind::rejected, 1});
}

TEST_CASE("bound exhaustion is reported") {
  TuringMachine m = tiny({{"q0", S("a"), "q0", S("a"), HeadMove::right},
                          {"q0", S("B"), "q0", S("B"), HeadMove::right}},
                         {"q1"});
  CHECK(tm_run(m, W("a"), 5).kind == TmVerdictKind::bound_exceeded);
}

TEST_CASE("input outside the alphabet is rejected up front") {
  TuringMachine m = tiny({}, {});
  CHECK_THROWS_AS(tm_run(m, W("b"), 5), std::invalid_argument);
}

TEST_CASE("even number of a's accepted within a small depth") {
  TuringMachine m = samples::even_as();
  TmVerdict v = tm_run(m, W("a a"), 10);
  CHECK(v.accepted());
  CHECK(v.depth <= 4);
  CHECK_FALSE(tm_run(m, W("a"), 10).accepted());
  CHECK(tm_run(m, Word{}, 10).accepted());
  CHECK(tm_run(m, W("b a b a b"), 20).accepted());
}

TEST_CASE("acceptance depth grows monotonically with the bound") {
  TuringMachine m = samples::even_as();
  TmVerdict tight = tm_run(m, W("a a b"), 4);
  REQUIRE(tight.accepted());
  for (std::size_t bound = tight.depth; bound < tight.depth + 6; ++bound) {
    TmVerdict v = tm_run(m, W("a a b"), bound);
    CHECK(v == tight);
  }
}

TEST_CASE("oracle verdicts are deterministic") {
  TuringMachine m = samples::palindrome();
  TmVerdict first = tm_run(m, W("a b a"), 100);
  for (int i = 0; i < 5; ++i) CHECK(tm_run(m, W("a b a"), 100) == first);
}

TEST_CASE("a n b n sample behaves") {
  TuringMachine m = samples::anbn();
  CHECK(tm_run(m, W("a b"), 100).accepted());
  CHECK(tm_run(m, W("a a b b"), 200).accepted());
  CHECK_FALSE(tm_run(m, Word{}, 100).accepted());
  CHECK_FALSE(tm_run(m, W("a b b"), 200).accepted());
  CHECK_FALSE(tm_run(m, W("b a"), 100).accepted());
}

TEST_CASE("palindrome sample behaves") {
  TuringMachine m = samples::palindrome();
  for (const char* yes : {"", "a", "b", "a a", "a b a", "b a b", "a b b a"}) {
    CAPTURE(yes);
    CHECK(tm_run(m, W(yes), 200).accepted());
  }
  for (const char* no : {"a b", "b a", "a a b", "a b b b"}) {
    CAPTURE(no);
    CHECK_FALSE(tm_run(m, W(no), 200).accepted());
  }
}

TEST_CASE("machine validation catches structural mistakes") {
  TuringMachine m = samples::even_as();
  CHECK(validate(m).ok());

  TuringMachine bad = m;
  bad.input_alphabet.insert(bad.blank);
  CHECK_FALSE(validate(bad).ok());

  TuringMachine unknown = m;
  unknown.transitions.push_back({"nope", S("a"), "e", S("a"), HeadMove::right});
  CHECK_FALSE(validate(unknown).ok());
}
