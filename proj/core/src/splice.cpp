#include "nusp/splice.hpp"

namespace nusp {
namespace {

// Prefixes of x ending right after first_keep, one per occurrence of the
// combined cut site first_keep.first_cut.
std::vector<Word> left_parts(const SplicingRule& r, const Word& x) {
  Word site = r.first_keep + r.first_cut;
  std::vector<Word> out;
  for (std::size_t at : x.occurrences(site)) {
    out.push_back(x.prefix(at + r.first_keep.size()));
  }
  return out;
}

std::vector<Word> right_parts(const SplicingRule& r, const Word& y) {
  Word site = r.second_cut + r.second_keep;
  std::vector<Word> out;
  for (std::size_t at : y.occurrences(site)) {
    out.push_back(y.suffix_from(at + r.second_cut.size()));
  }
  return out;
}

}  // namespace

WordSet splice_products(const SplicingRule& rule, const Word& x, const Word& y) {
  WordSet out;
  std::vector<Word> lefts = left_parts(rule, x);
  if (lefts.empty()) return out;
  std::vector<Word> rights = right_parts(rule, y);
  for (const Word& l : lefts) {
    for (const Word& r : rights) {
      out.insert(l + r);
    }
  }
  return out;
}

WordSet splice_all(std::span<const SplicingRule> rules, const WordSet& words) {
  WordSet out;
  for (const SplicingRule& rule : rules) {
    // Match each side once per word, then cross the matching lists; most
    // rules are marker-anchored and match very few words.
    std::vector<Word> lefts;
    std::vector<Word> rights;
    for (const Word& w : words) {
      for (const Word& l : left_parts(rule, w)) lefts.push_back(l);
      for (const Word& r : right_parts(rule, w)) rights.push_back(r);
    }
    for (const Word& l : lefts) {
      for (const Word& r : rights) {
        out.insert(l + r);
      }
    }
  }
  return out;
}

}  // namespace nusp
