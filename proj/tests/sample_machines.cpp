#include "sample_machines.hpp"

namespace nusp::samples {
namespace {

Symbol sym(const char* t) { return Symbol::intern(t); }

}  // namespace

TuringMachine even_as() {
  TuringMachine m;
  Symbol a = sym("a"), b = sym("b"), B = sym("B");
  m.states = {"e", "o", "qacc"};
  m.input_alphabet = {a, b};
  m.tape_alphabet = {a, b, B};
  m.blank = B;
  m.initial_state = "e";
  m.accepting = {"qacc"};
  m.transitions = {
      {"e", a, "o", a, HeadMove::right}, {"o", a, "e", a, HeadMove::right},
      {"e", b, "e", b, HeadMove::right}, {"o", b, "o", b, HeadMove::right},
      {"e", B, "qacc", B, HeadMove::right},
  };
  return m;
}

TuringMachine anbn() {
  TuringMachine m;
  Symbol a = sym("a"), b = sym("b"), X = sym("X"), Y = sym("Y"), B = sym("B");
  m.states = {"q0", "q1", "q2", "q3", "qacc"};
  m.input_alphabet = {a, b};
  m.tape_alphabet = {a, b, X, Y, B};
  m.blank = B;
  m.initial_state = "q0";
  m.accepting = {"qacc"};
  m.transitions = {
      {"q0", a, "q1", X, HeadMove::right},  // cross off one a
      {"q1", a, "q1", a, HeadMove::right},  // run right to the first b
      {"q1", Y, "q1", Y, HeadMove::right},
      {"q1", b, "q2", Y, HeadMove::left},   // cross off the matching b
      {"q2", Y, "q2", Y, HeadMove::left},   // run back to the crossed-off a
      {"q2", a, "q2", a, HeadMove::left},
      {"q2", X, "q0", X, HeadMove::right},
      {"q0", Y, "q3", Y, HeadMove::right},  // all a's used, expect only Y then blank
      {"q3", Y, "q3", Y, HeadMove::right},
      {"q3", B, "qacc", B, HeadMove::right},
  };
  return m;
}

TuringMachine palindrome() {
  TuringMachine m;
  Symbol a = sym("a"), b = sym("b"), X = sym("X"), Y = sym("Y"), B = sym("B");
  m.states = {"q0", "qa0", "qa", "qav", "qb0", "qb", "qbv", "q2", "qacc"};
  m.input_alphabet = {a, b};
  m.tape_alphabet = {a, b, X, Y, B};
  m.blank = B;
  m.initial_state = "q0";
  m.accepting = {"qacc"};
  m.transitions = {
      // mark the leftmost unmarked cell and remember it
      {"q0", a, "qa0", X, HeadMove::right},
      {"q0", b, "qb0", X, HeadMove::right},
      {"q0", Y, "qacc", Y, HeadMove::right},  // nothing unmarked remains
      {"q0", B, "qacc", B, HeadMove::right},
      // just marked an a; boundary right away means it was the middle
      {"qa0", Y, "qacc", Y, HeadMove::right},
      {"qa0", B, "qacc", B, HeadMove::right},
      {"qa0", a, "qa", a, HeadMove::right},
      {"qa0", b, "qa", b, HeadMove::right},
      {"qa0", a, "qav", Y, HeadMove::right},  // or guess this a is the last
      // scan right, nondeterministically guessing the last unmarked cell
      {"qa", a, "qa", a, HeadMove::right},
      {"qa", b, "qa", b, HeadMove::right},
      {"qa", a, "qav", Y, HeadMove::right},
      // the guess only survives when the boundary follows immediately
      {"qav", Y, "q2", Y, HeadMove::left},
      {"qav", B, "q2", B, HeadMove::left},
      // same for a remembered b
      {"qb0", Y, "qacc", Y, HeadMove::right},
      {"qb0", B, "qacc", B, HeadMove::right},
      {"qb0", a, "qb", a, HeadMove::right},
      {"qb0", b, "qb", b, HeadMove::right},
      {"qb0", b, "qbv", Y, HeadMove::right},
      {"qb", a, "qb", a, HeadMove::right},
      {"qb", b, "qb", b, HeadMove::right},
      {"qb", b, "qbv", Y, HeadMove::right},
      {"qbv", Y, "q2", Y, HeadMove::left},
      {"qbv", B, "q2", B, HeadMove::left},
      // walk back to the left boundary
      {"q2", a, "q2", a, HeadMove::left},
      {"q2", b, "q2", b, HeadMove::left},
      {"q2", Y, "q2", Y, HeadMove::left},
      {"q2", X, "q0", X, HeadMove::right},
  };
  return m;
}

}  // namespace nusp::samples
