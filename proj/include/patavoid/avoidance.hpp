#pragma once

#include <optional>

#include "patavoid/types.hpp"

namespace patavoid {

// Exact avoider count f(a, p) or c(n, k): nonnegative, bounded by the total
// number of enumerated objects.
using AvoidanceCount = BigInt;

// Strict-inequality containment: w contains p iff there are positions
// i_1 < ... < i_m whose values are pairwise distinct and in the same relative
// order as p. Repeated values never witness a pattern. Dispatches to O(L)
// scans for the six length-3 patterns and to patience sorting for increasing
// patterns (1,2,...,r); everything else falls back to the backtracking
// reference search.
bool contains(const Word& w, const Pattern& p);

// Backtracking reference implementation, kept independent of the fast scans
// for differential testing.
bool contains_naive(const Word& w, const Pattern& p);

Word reverse_word(const Word& w);

// Letter i -> k+1-i. Letters must lie in 1..k (std::domain_error otherwise).
Word complement_word(const Word& w, int k);

// Lexicographic stream over the distinct permutations of M(spec).
// Restartable via reset(). The spec must be normalized (entries >= 1).
class MultisetPermutationStream {
 public:
  explicit MultisetPermutationStream(const MultisetSpec& spec);

  std::optional<Word> next();
  void reset();

 private:
  Word first_;
  Word current_;
  bool started_ = false;
  bool done_ = false;
};

// Lexicographic stream over the compositions matching a query.
// Restartable via reset().
class CompositionStream {
 public:
  explicit CompositionStream(CompositionQuery q);  // validates q

  std::optional<Word> next();
  void reset();

  const CompositionQuery& query() const { return query_; }

 private:
  std::optional<Word> first() const;
  bool advance(Word& w) const;

  CompositionQuery query_;
  long cap_ = 0;  // effective max part value
  std::optional<Word> current_;
  bool started_ = false;
  bool done_ = false;
};

// f(a, p): permutations of M(spec) avoiding p. jobs > 1 partitions the
// enumeration by first letter; the result is summed in a fixed order and is
// identical to the sequential count.
AvoidanceCount count_avoiders_multiset(const MultisetSpec& spec,
                                        const Pattern& p, int jobs = 1);

// Compositions matching q that avoid p; partitions by first part for jobs > 1.
AvoidanceCount count_avoiding_compositions(const CompositionQuery& q,
                                            const Pattern& p, int jobs = 1);

BigInt count_all_compositions(const CompositionQuery& q);

}  // namespace patavoid
