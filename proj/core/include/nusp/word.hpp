#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "nusp/symbol.hpp"

namespace nusp {

using SymbolSet = std::set<Symbol>;

// Finite symbol sequence; the empty word is the neutral element of
// concatenation.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {}
  Word(std::initializer_list<Symbol> symbols) : symbols_(symbols) {}

  // Builds a word by interning each whitespace-separated token.
  static Word tokens(std::string_view text);

  bool empty() const { return symbols_.empty(); }
  std::size_t size() const { return symbols_.size(); }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }

  auto begin() const { return symbols_.begin(); }
  auto end() const { return symbols_.end(); }
  const std::vector<Symbol>& symbols() const { return symbols_; }

  // Prefix of the first n symbols.
  Word prefix(std::size_t n) const;
  // Suffix starting at position i.
  Word suffix_from(std::size_t i) const;

  Word& append(const Word& other);
  friend Word operator+(Word a, const Word& b) {
    a.append(b);
    return a;
  }

  // Set of distinct symbols; alphabet_of(empty) is the empty set.
  SymbolSet alphabet() const;

  // Start positions of every occurrence of factor, overlapping included.
  // The empty factor occurs at every position 0..size().
  std::vector<std::size_t> occurrences(const Word& factor) const;

  bool starts_with(const Word& factor, std::size_t at) const;

  // Space-joined token texts; "~" for the empty word. Debug rendering only,
  // file emission quotes tokens as needed.
  std::string str() const;

  friend bool operator==(const Word& a, const Word& b) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    return a.symbols_ <=> b.symbols_;
  }

 private:
  std::vector<Symbol> symbols_;
};

using WordSet = std::set<Word>;

// Canonical ordering by token text, for deterministic emission.
struct WordTextLess {
  bool operator()(const Word& a, const Word& b) const;
};

SymbolSet alphabet_of(const Word& w);

}  // namespace nusp
