// Randomized property suites over small instances, with the generators kept
// in test_util.hpp. Seeds are fixed so failures reproduce.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "patavoid/avoidance.hpp"
#include "patavoid/bijection.hpp"
#include "patavoid/series.hpp"
#include "test_util.hpp"

using namespace patavoid;
using testutil::Rng;

TEST_CASE("containment differential: fast scans vs reference") {
  Rng rng(0xD1FF);
  for (int trial = 0; trial < 2000; ++trial) {
    const Word w = testutil::random_word(rng, 11, 0, 5);
    for (const Pattern& p : all_s3_patterns()) {
      REQUIRE(contains(w, p) == contains_naive(w, p));
    }
  }
}

TEST_CASE("theta preserves increasing-pattern containment on random pairs") {
  Rng rng(0xBEEF);
  const Pattern p123({1, 2, 3});
  const Pattern p1234({1, 2, 3, 4});
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<int> mult(
        static_cast<std::size_t>(testutil::rand_int(rng, 1, 4)));
    long total = 0;
    for (int& a : mult) {
      a = testutil::rand_int(rng, 1, 3);
      total += a;
    }
    if (total > 9) continue;
    const MultisetSpec source(mult);
    std::vector<int> shuffled = mult;
    for (std::size_t i = shuffled.size(); i > 1; --i) {
      std::swap(shuffled[i - 1],
                shuffled[static_cast<std::size_t>(
                    testutil::rand_int(rng, 0, static_cast<int>(i) - 1))]);
    }
    const MultisetSpec target(shuffled);

    // pick a random permutation of the source multiset
    MultisetPermutationStream stream(source);
    std::vector<Word> words;
    while (auto w = stream.next()) words.push_back(*w);
    const Word& w = words[static_cast<std::size_t>(
        testutil::rand_int(rng, 0, static_cast<int>(words.size()) - 1))];

    const Word image = theta(w, target);
    REQUIRE(contains(w, p123) == contains(image, p123));
    REQUIRE(contains(w, p1234) == contains(image, p1234));
  }
}

TEST_CASE("theta round-trips through the inverse rearrangement") {
  Rng rng(0xABBA);
  for (int trial = 0; trial < 1000; ++trial) {
    const Word w = testutil::random_word(rng, 9, 1, 4);
    if (w.empty()) continue;
    const MultisetSpec source = word_multiset(w);
    std::vector<int> shuffled = source.mult;
    for (std::size_t i = shuffled.size(); i > 1; --i) {
      std::swap(shuffled[i - 1],
                shuffled[static_cast<std::size_t>(
                    testutil::rand_int(rng, 0, static_cast<int>(i) - 1))]);
    }
    const MultisetSpec target(shuffled);
    const Word there = theta(w, target);
    const Word back = theta(there, source);
    // theta with swapped endpoints undoes a single adjacent swap; across a
    // full schedule the two directions need not be mutual inverses, but they
    // must both land in the right multiset.
    MultisetSpec back_mult = word_multiset(back);
    back_mult.mult.resize(source.mult.size(), 0);
    REQUIRE(back_mult == source);
    MultisetSpec there_mult = word_multiset(there);
    there_mult.mult.resize(target.mult.size(), 0);
    REQUIRE(there_mult == target);
  }
}

TEST_CASE("composition stream successor stays lexicographic") {
  Rng rng(0xFEED);
  for (int trial = 0; trial < 1000; ++trial) {
    CompositionQuery q;
    q.n = testutil::rand_int(rng, 0, 9);
    if (testutil::rand_int(rng, 0, 1) == 1) {
      q.part_count = testutil::rand_int(rng, 0, 5);
      if (testutil::rand_int(rng, 0, 1) == 1) {
        q.flavor = PartsFlavor::nonnegative;
      }
    }
    if (testutil::rand_int(rng, 0, 1) == 1) {
      q.max_part = testutil::rand_int(rng, 0, 6);
    }
    CompositionStream stream(q);
    std::optional<Word> prev;
    std::set<Word> seen;
    while (auto w = stream.next()) {
      if (prev) REQUIRE(*prev < *w);
      REQUIRE(seen.insert(*w).second);
      long sum = 0;
      for (int x : *w) {
        sum += x;
        if (q.max_part) REQUIRE(x <= *q.max_part);
        REQUIRE(x >= (q.flavor == PartsFlavor::positive ? 1 : 0));
      }
      REQUIRE(sum == q.n);
      if (q.part_count) {
        REQUIRE(static_cast<int>(w->size()) == *q.part_count);
      }
      prev = *w;
    }
  }
}
