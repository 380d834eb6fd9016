#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "patavoid/types.hpp"
#include "test_util.hpp"

using namespace patavoid;
using testutil::Rng;

TEST_CASE("normalize_spec strips zeros and is idempotent") {
  CHECK(normalize_spec(MultisetSpec({2, 0, 3})) == MultisetSpec({2, 3}));
  CHECK(normalize_spec(MultisetSpec({1, 1, 1})) == MultisetSpec({1, 1, 1}));
  CHECK(normalize_spec(MultisetSpec({0, 0})) == MultisetSpec{});

  Rng rng(42);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<int> mult(static_cast<std::size_t>(testutil::rand_int(rng, 0, 5)));
    for (int& a : mult) a = testutil::rand_int(rng, 0, 4);
    const MultisetSpec once = normalize_spec(MultisetSpec(mult));
    CHECK(normalize_spec(once) == once);
    CHECK(once.is_normalized());
  }
}

TEST_CASE("word_multiset counts letters") {
  CHECK(word_multiset({1, 3, 1, 2}) == MultisetSpec({2, 1, 1}));
  CHECK(word_multiset({}) == MultisetSpec{});

  const Word example = {7, 5, 6, 6, 4, 6, 6, 4, 6, 6,
                        4, 6, 5, 3, 2, 4, 1, 1, 4};
  CHECK(word_multiset(example) == MultisetSpec({2, 1, 1, 5, 2, 7, 1}));

  CHECK_THROWS_AS(word_multiset({1, 0, 2}), std::domain_error);
}

TEST_CASE("word_multiset is constant on rearrangements") {
  Rng rng(7);
  for (int trial = 0; trial < 1000; ++trial) {
    Word w = testutil::random_word(rng, 8, 1, 5);
    Word r(w.rbegin(), w.rend());
    CHECK(word_multiset(w) == word_multiset(r));
  }
}

TEST_CASE("pattern validation") {
  CHECK(validate_pattern(Pattern({1, 3, 2})));
  CHECK_FALSE(validate_pattern(Pattern({1, 1, 2})));
  CHECK(validate_pattern(Pattern({1, 2, 3, 4})));
  CHECK_FALSE(validate_pattern(Pattern({1})));  // too short
  CHECK_FALSE(validate_pattern(Pattern({2, 3})));

  CHECK(Pattern::parse("132") == Pattern({1, 3, 2}));
  CHECK_THROWS_AS(Pattern::parse("102"), std::invalid_argument);
  CHECK_THROWS_AS(Pattern::parse("11"), std::invalid_argument);
  CHECK_THROWS_AS(Pattern::parse(""), std::invalid_argument);
  CHECK(pattern_name(Pattern({3, 1, 2})) == "312");
}

TEST_CASE("pattern reverse and complement") {
  CHECK(reverse_pattern(Pattern({1, 3, 2})) == Pattern({2, 3, 1}));
  CHECK(complement_pattern(Pattern({1, 3, 2})) == Pattern({3, 1, 2}));
  CHECK(all_s3_patterns().size() == 6);
  for (const Pattern& p : all_s3_patterns()) {
    CHECK(reverse_pattern(reverse_pattern(p)) == p);
    CHECK(complement_pattern(complement_pattern(p)) == p);
  }
}

TEST_CASE("permutation_count is the multinomial") {
  const testutil::PascalTable pascal(24);
  CHECK(MultisetSpec({2, 1, 1}).permutation_count() == 12);
  CHECK(MultisetSpec{}.permutation_count() == 1);

  Rng rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<int> mult(static_cast<std::size_t>(testutil::rand_int(rng, 1, 4)));
    for (int& a : mult) a = testutil::rand_int(rng, 0, 4);
    const MultisetSpec spec(mult);
    BigInt expected = 1;
    int placed = 0;
    for (int a : mult) {
      placed += a;
      expected *= pascal.at(placed, a);
    }
    CHECK(spec.permutation_count() == expected);
  }
}

TEST_CASE("library binomial matches Pascal") {
  const testutil::PascalTable pascal(30);
  for (int n = 0; n <= 30; ++n) {
    for (int k = 0; k <= n; ++k) {
      CHECK(binomial(n, k) == pascal.at(n, k));
    }
  }
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(5, 6) == 0);
}

TEST_CASE("composition query validation") {
  CompositionQuery q;
  q.n = 2;
  q.flavor = PartsFlavor::nonnegative;
  CHECK_THROWS_AS(q.validate(), std::invalid_argument);
  q.part_count = 2;
  CHECK_NOTHROW(q.validate());
  q.n = -1;
  CHECK_THROWS_AS(q.validate(), std::invalid_argument);
}

TEST_CASE("spec invariants") {
  CHECK(MultisetSpec({2, 1, 1}).total() == 4);
  CHECK(MultisetSpec({2, 1, 1}).is_rearrangement_of(MultisetSpec({1, 2, 1})));
  CHECK_FALSE(MultisetSpec({2, 1}).is_rearrangement_of(MultisetSpec({2, 1, 1})));
  CHECK_THROWS_AS(MultisetSpec({1, -1}), std::domain_error);
}
