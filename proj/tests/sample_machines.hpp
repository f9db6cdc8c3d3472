#pragma once

#include "nusp/turing.hpp"

namespace nusp::samples {

// Regular: words over {a,b} with an even number of a's.
TuringMachine even_as();

// Context-free: a^n b^n for n >= 1, by two-way crossing off.
TuringMachine anbn();

// Palindromes over {a,b}; guesses the last unmarked cell nondeterministically.
TuringMachine palindrome();

}  // namespace nusp::samples
