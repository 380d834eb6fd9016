#include "patavoid/types.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace patavoid {

MultisetSpec::MultisetSpec(std::vector<int> m) : mult(std::move(m)) {
  for (int a : mult) {
    if (a < 0) throw std::domain_error("multiplicities must be nonnegative");
  }
}

long MultisetSpec::total() const {
  return std::accumulate(mult.begin(), mult.end(), 0L);
}

bool MultisetSpec::is_normalized() const {
  return std::all_of(mult.begin(), mult.end(), [](int a) { return a >= 1; });
}

bool MultisetSpec::is_rearrangement_of(const MultisetSpec& other) const {
  if (mult.size() != other.mult.size()) return false;
  auto a = mult;
  auto b = other.mult;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

BigInt MultisetSpec::permutation_count() const {
  BigInt result = 1;
  long placed = 0;
  for (int a : mult) {
    // multiply by binomial(placed + a, a) incrementally
    for (int t = 1; t <= a; ++t) {
      ++placed;
      result = result * placed / t;
    }
  }
  return result;
}

MultisetSpec normalize_spec(const MultisetSpec& spec) {
  std::vector<int> out;
  out.reserve(spec.mult.size());
  for (int a : spec.mult) {
    if (a > 0) out.push_back(a);
  }
  return MultisetSpec(std::move(out));
}

MultisetSpec word_multiset(const Word& w) {
  int max_letter = 0;
  for (int x : w) {
    if (x < 1) throw std::domain_error("multiset letters start at 1");
    max_letter = std::max(max_letter, x);
  }
  std::vector<int> mult(static_cast<std::size_t>(max_letter), 0);
  for (int x : w) ++mult[static_cast<std::size_t>(x - 1)];
  return MultisetSpec(std::move(mult));
}

Pattern Pattern::parse(const std::string& digits) {
  std::vector<int> perm;
  perm.reserve(digits.size());
  for (char c : digits) {
    if (c < '1' || c > '9') {
      throw std::invalid_argument("pattern must be a string of digits 1-9: \"" +
                                  digits + "\"");
    }
    perm.push_back(c - '0');
  }
  Pattern p(std::move(perm));
  if (!validate_pattern(p)) {
    throw std::invalid_argument("not a permutation of 1..m: \"" + digits +
                                "\"");
  }
  return p;
}

bool Pattern::is_increasing() const {
  for (int i = 0; i < length(); ++i) {
    if (perm[static_cast<std::size_t>(i)] != i + 1) return false;
  }
  return true;
}

bool validate_pattern(const Pattern& p) {
  const int m = p.length();
  if (m < 2) return false;
  std::vector<bool> seen(static_cast<std::size_t>(m), false);
  for (int v : p.perm) {
    if (v < 1 || v > m || seen[static_cast<std::size_t>(v - 1)]) return false;
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
  return true;
}

Pattern reverse_pattern(const Pattern& p) {
  return Pattern(std::vector<int>(p.perm.rbegin(), p.perm.rend()));
}

Pattern complement_pattern(const Pattern& p) {
  std::vector<int> out(p.perm.size());
  const int m = p.length();
  std::transform(p.perm.begin(), p.perm.end(), out.begin(),
                 [m](int v) { return m + 1 - v; });
  return Pattern(std::move(out));
}

const std::vector<Pattern>& all_s3_patterns() {
  static const std::vector<Pattern> patterns = {
      Pattern({1, 2, 3}), Pattern({1, 3, 2}), Pattern({2, 1, 3}),
      Pattern({2, 3, 1}), Pattern({3, 1, 2}), Pattern({3, 2, 1})};
  return patterns;
}

std::string pattern_name(const Pattern& p) {
  std::string s;
  s.reserve(p.perm.size());
  for (int v : p.perm) s += static_cast<char>('0' + v);
  return s;
}

void CompositionQuery::validate() const {
  if (n < 0) throw std::invalid_argument("composition target must be >= 0");
  if (part_count && *part_count < 0) {
    throw std::invalid_argument("part count must be >= 0");
  }
  if (max_part && *max_part < 0) {
    throw std::invalid_argument("max part must be >= 0");
  }
  if (flavor == PartsFlavor::nonnegative && !part_count) {
    throw std::invalid_argument(
        "nonnegative parts require a fixed part count");
  }
}

BigInt binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (long t = 1; t <= k; ++t) {
    result = result * (n - k + t) / t;
  }
  return result;
}

}  // namespace patavoid
