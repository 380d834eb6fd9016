#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <vector>

namespace patavoid {

// All counts are exact. Composition counts reach 2^(n-1) and avoider counts
// grow like phi^n, so fixed-width integers overflow near n ~ 90.
using BigInt = boost::multiprecision::cpp_int;

// A word: finite sequence of nonnegative integer letters. Serves both as a
// multiset permutation (letters >= 1) and as the part sequence of a
// composition (parts >= 0 for the nonnegative flavor).
using Word = std::vector<int>;

// Multiplicity vector a = (a_1,...,a_k): the multiset M(a) contains exactly
// a_i copies of the letter i. Zero entries are allowed at the boundary;
// normalize_spec() strips them.
struct MultisetSpec {
  std::vector<int> mult;

  MultisetSpec() = default;
  explicit MultisetSpec(std::vector<int> m);

  int k() const { return static_cast<int>(mult.size()); }
  long total() const;
  bool is_normalized() const;  // all entries >= 1
  bool is_rearrangement_of(const MultisetSpec& other) const;
  BigInt permutation_count() const;  // multinomial(total; a_1,...,a_k)

  bool operator==(const MultisetSpec&) const = default;
};

// Strips zero multiplicities and relabels letters consecutively. Counting
// functions are unchanged by normalization. Idempotent.
MultisetSpec normalize_spec(const MultisetSpec& spec);

// Multiplicity vector of w, indexed 1..max(w). All letters must be >= 1;
// a zero letter raises std::domain_error. Constant on rearrangements of w.
MultisetSpec word_multiset(const Word& w);

// A pattern: a permutation of {1,...,m}, m >= 2.
struct Pattern {
  std::vector<int> perm;

  Pattern() = default;
  explicit Pattern(std::vector<int> p) : perm(std::move(p)) {}

  // Parses digit strings like "132". Throws std::invalid_argument if the
  // result is not a valid pattern.
  static Pattern parse(const std::string& digits);

  int length() const { return static_cast<int>(perm.size()); }
  bool is_increasing() const;  // (1,2,...,m)

  bool operator==(const Pattern&) const = default;
};

bool validate_pattern(const Pattern& p);

Pattern reverse_pattern(const Pattern& p);
Pattern complement_pattern(const Pattern& p);  // letter i -> m+1-i

// The six patterns of length 3, in lexicographic order.
const std::vector<Pattern>& all_s3_patterns();

std::string pattern_name(const Pattern& p);

enum class PartsFlavor { positive, nonnegative };

// Which compositions of n to consider. The nonnegative flavor requires a
// fixed part count (otherwise there are infinitely many compositions).
struct CompositionQuery {
  long n = 0;
  PartsFlavor flavor = PartsFlavor::positive;
  std::optional<int> part_count;  // k
  std::optional<int> max_part;

  // Throws std::invalid_argument on an inconsistent query.
  void validate() const;
};

BigInt binomial(long n, long k);

}  // namespace patavoid
