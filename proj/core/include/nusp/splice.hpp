#pragma once

#include <compare>
#include <span>
#include <vector>

#include "nusp/word.hpp"

namespace nusp {

// A splicing rule cuts two words and glues the left part of the first to the
// right part of the second. Applied to (x, y) it asks for factorizations
//   x = p . first_keep . first_cut . rest
//   y = rest' . second_cut . second_keep . s
// and produces p . first_keep . second_keep . s. Only this single product is
// generated, never the symmetric one.
struct SplicingRule {
  Word first_keep;    // kept tail of the first word's prefix
  Word first_cut;     // dropped start of the first word's suffix
  Word second_cut;    // dropped end of the second word's prefix
  Word second_keep;   // kept start of the second word's suffix

  friend bool operator==(const SplicingRule&, const SplicingRule&) = default;
  friend std::strong_ordering operator<=>(const SplicingRule&,
                                          const SplicingRule&) = default;
};

// All products of one rule on the ordered pair (x, y), over every occurrence
// of both cut sites, overlapping occurrences and empty components included.
// No occurrence means the empty set.
WordSet splice_products(const SplicingRule& rule, const Word& x, const Word& y);

// One-step splicing closure of a word set: the union of splice_products over
// all rules and all ordered pairs from the set, a word pairing with itself
// included. The input set itself is not part of the result.
WordSet splice_all(std::span<const SplicingRule> rules, const WordSet& words);

}  // namespace nusp
