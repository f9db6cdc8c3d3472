#include "nusp/filter.hpp"

#include <algorithm>

namespace nusp {
namespace {

bool intersects(const SymbolSet& a, const SymbolSet& b) {
  if (a.size() > b.size()) return intersects(b, a);
  return std::any_of(a.begin(), a.end(),
                     [&](Symbol s) { return b.count(s) != 0; });
}

bool contains_all(const SymbolSet& haystack, const SymbolSet& needles) {
  return std::all_of(needles.begin(), needles.end(),
                     [&](Symbol s) { return haystack.count(s) != 0; });
}

}  // namespace

bool passes(const SymbolSet& alphabet, const Filter& f) {
  if (intersects(f.forbidding, alphabet)) return false;
  if (f.mode == FilterMode::strong) return contains_all(alphabet, f.permitting);
  return intersects(f.permitting, alphabet);
}

bool passes(const Word& w, const Filter& f) { return passes(w.alphabet(), f); }

WordSet filter_words(const WordSet& words, const Filter& f) {
  WordSet out;
  for (const Word& w : words) {
    if (passes(w, f)) out.insert(w);
  }
  return out;
}

}  // namespace nusp
