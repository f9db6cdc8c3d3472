#pragma once

#include "nusp/word.hpp"

namespace nusp {

enum class FilterMode { strong, weak };

// Random-context pass condition. Strong mode wants every permitting symbol
// present, weak mode wants at least one; both reject any forbidden symbol.
struct Filter {
  SymbolSet permitting;
  SymbolSet forbidding;
  FilterMode mode = FilterMode::weak;
};

bool passes(const SymbolSet& alphabet, const Filter& f);
bool passes(const Word& w, const Filter& f);

// Members of the set that pass the filter.
WordSet filter_words(const WordSet& words, const Filter& f);

}  // namespace nusp
