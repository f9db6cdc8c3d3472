#include "doctest.h"
#include "nusp/filter.hpp"

using namespace nusp;

namespace {

Word W(const char* text) { return Word::tokens(text); }
Symbol S(const char* t) { return Symbol::intern(t); }

Filter F(SymbolSet p, SymbolSet f, FilterMode m) { return Filter{p, f, m}; }

}  // namespace

TEST_CASE("strong and weak pass conditions") {
  SymbolSet p{S("a"), S("b")};
  SymbolSet f{S("d")};
  CHECK(passes(W("a b c"), F(p, f, FilterMode::strong)));
  CHECK_FALSE(passes(W("a c"), F(p, f, FilterMode::strong)));
  CHECK(passes(W("a c"), F(p, f, FilterMode::weak)));
}

TEST_CASE("empty word against empty permitting set") {
  SymbolSet f{S("d")};
  CHECK(passes(Word{}, F({}, f, FilterMode::strong)));
  CHECK_FALSE(passes(Word{}, F({}, f, FilterMode::weak)));
}

TEST_CASE("filter_words keeps exactly the passers") {
  SymbolSet p{S("a"), S("b")};
  SymbolSet f{S("d")};
  WordSet words{W("a b c"), W("a c"), W("a d")};
  CHECK(filter_words(words, F(p, f, FilterMode::strong)) == WordSet{W("a b c")});
  CHECK(filter_words(words, F(p, f, FilterMode::weak)) ==
        WordSet{W("a b c"), W("a c")});
  CHECK(filter_words({}, F(p, f, FilterMode::weak)).empty());
}

TEST_CASE("forbidden symbols dominate in both modes") {
  SymbolSet p{S("a")};
  SymbolSet f{S("d")};
  for (FilterMode mode : {FilterMode::strong, FilterMode::weak}) {
    CHECK_FALSE(passes(W("a d"), F(p, f, mode)));
  }
}

TEST_CASE("strong implies weak when the permitting set is non-empty") {
  std::vector<Symbol> alphabet{S("a"), S("b"), S("c")};
  std::vector<Word> words{Word{}, W("a"), W("b c"), W("a b c"), W("c c a")};
  // every disjoint (P, F) split of the alphabet
  for (int mask = 0; mask < 27; ++mask) {
    SymbolSet p, f;
    int m = mask;
    for (Symbol s : alphabet) {
      if (m % 3 == 1) p.insert(s);
      if (m % 3 == 2) f.insert(s);
      m /= 3;
    }
    if (p.empty()) continue;
    for (const Word& w : words) {
      if (passes(w, F(p, f, FilterMode::strong))) {
        CHECK(passes(w, F(p, f, FilterMode::weak)));
      }
    }
  }
}

TEST_CASE("filtering is idempotent and shrinking") {
  SymbolSet p{S("a")};
  WordSet words{W("a"), W("b"), W("a b")};
  Filter filt = F(p, {S("c")}, FilterMode::weak);
  WordSet once = filter_words(words, filt);
  for (const Word& w : once) CHECK(words.count(w) == 1);
  CHECK(filter_words(once, filt) == once);
}
