#include "doctest.h"
#include "nusp/oracle.hpp"

using namespace nusp;

namespace {

Word W(const char* text) { return Word::tokens(text); }

SplicingRule R(const char* fk, const char* fc, const char* sc, const char* sk) {
  auto comp = [](const char* t) { return *t ? Word::tokens(t) : Word{}; };
  return SplicingRule{comp(fk), comp(fc), comp(sc), comp(sk)};
}

// A plausible-looking but wrong splicing step: it only looks at the first
// occurrence of each cut site, dropping overlapping factorizations.
WordSet first_occurrence_only(std::span<const SplicingRule> rules,
                              const WordSet& words) {
  WordSet out;
  for (const SplicingRule& r : rules) {
    Word left_site = r.first_keep + r.first_cut;
    Word right_site = r.second_cut + r.second_keep;
    for (const Word& x : words) {
      auto left = x.occurrences(left_site);
      if (left.empty()) continue;
      Word p = x.prefix(left.front() + r.first_keep.size());
      for (const Word& y : words) {
        auto right = y.occurrences(right_site);
        if (right.empty()) continue;
        out.insert(p + y.suffix_from(right.front() + r.second_cut.size()));
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("naive reference mirrors the basics") {
  std::vector<SplicingRule> rules{R("a", "b", "c", "d")};
  CHECK(naive_splice_all(rules, WordSet{W("a b"), W("c d")}) == WordSet{W("a d")});
  CHECK(naive_splice_all({}, WordSet{W("a b")}).empty());
}

TEST_CASE("instance generation replays identically per seed") {
  InstanceParams params;
  params.seed = 42;
  for (std::size_t i = 0; i < 20; ++i) {
    SigmaInstance a = make_instance(params, i);
    SigmaInstance b = make_instance(params, i);
    CHECK(a.rules == b.rules);
    CHECK(a.words == b.words);
  }
  // a different seed varies the stream
  InstanceParams other = params;
  other.seed = 43;
  bool differs = false;
  for (std::size_t i = 0; i < 20 && !differs; ++i) {
    differs = !(make_instance(params, i).rules == make_instance(other, i).rules);
  }
  CHECK(differs);
}

TEST_CASE("differential check passes for the real implementation") {
  InstanceParams params;
  CHECK_FALSE(differential_splice_check(params, 200).has_value());
  CHECK_FALSE(differential_splice_check(params, 0).has_value());  // vacuous
}

TEST_CASE("differential check catches an implementation that skips overlaps") {
  InstanceParams params;
  auto mismatch = differential_splice_check(params, 1000, first_occurrence_only);
  REQUIRE(mismatch.has_value());
  CHECK_FALSE(mismatch->describe().empty());
  // the offending instance must really diverge
  CHECK(naive_splice_all(mismatch->instance.rules, mismatch->instance.words) !=
        first_occurrence_only(mismatch->instance.rules, mismatch->instance.words));
}

TEST_CASE("differential check reports the earliest diverging case") {
  InstanceParams params;
  auto broken = [](std::span<const SplicingRule>, const WordSet&) { return WordSet{}; };
  auto mismatch = differential_splice_check(params, 50, broken);
  REQUIRE(mismatch.has_value());
  // every earlier case agreed, so the reported index is the first failure
  for (std::size_t i = 0; i < mismatch->case_index; ++i) {
    SigmaInstance inst = make_instance(params, i);
    CHECK(naive_splice_all(inst.rules, inst.words).empty());
  }
}
