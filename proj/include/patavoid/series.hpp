#pragma once

#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "patavoid/types.hpp"

namespace patavoid {

// Truncated power/Laurent series with exact integer coefficients.
//
// A TruncSeries is exact on the exponent range (-inf, trunc_order()]: every
// coefficient at or below the truncation order is the true coefficient, and
// everything below offset() is zero. Negative offsets are permitted for
// intermediate Laurent bookkeeping; counting results assert offset >= 0.
//
// Truncation orders combine under arithmetic so that exactness is never
// silently extended:
//   add:  trunc = min(ta, tb)
//   mul:  trunc = min(ta + offset_b, tb + offset_a)
//   shift by e: trunc += e
class TruncSeries {
 public:
  static TruncSeries zero(long trunc);
  static TruncSeries one(long trunc);
  static TruncSeries monomial(BigInt coef, long exp, long trunc);
  // 1 - x^d (d >= 1)
  static TruncSeries one_minus_xpow(long d, long trunc);
  // Series from explicit coefficients for exponents offset, offset+1, ...
  static TruncSeries from_coeffs(long offset, std::vector<BigInt> coeffs,
                                 long trunc);

  long offset() const { return offset_; }
  long trunc_order() const { return trunc_; }
  bool is_zero() const { return coeffs_.empty(); }

  // Exact coefficient of x^e for e <= trunc_order(); throws std::out_of_range
  // above the truncation order (the value there is unknown, not zero).
  const BigInt& coeff(long e) const;

  // Coefficients of x^lo .. x^hi (hi <= trunc_order()).
  std::vector<BigInt> coeff_range(long lo, long hi) const;

  TruncSeries shifted(long e) const;  // multiply by x^e

  // Multiplicative inverse. Requires unit constant term: after trimming,
  // offset == 0 and coeff(0) == +-1 (std::domain_error otherwise); this keeps
  // every coefficient an exact integer.
  TruncSeries inverse() const;

  friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
  TruncSeries operator-() const;

  // Structural equality: same truncation order and same coefficients.
  bool operator==(const TruncSeries& other) const;

  std::string str() const;

 private:
  TruncSeries(long offset, std::vector<BigInt> coeffs, long trunc);
  void trim();

  long offset_ = 0;
  std::vector<BigInt> coeffs_;  // exponents offset_ .. offset_+size-1
  long trunc_ = 0;
};

// Sparse multivariate polynomial with integer coefficients, ordered by graded
// lexicographic monomial order (total degree first, then x_1 > x_2 > ...).
// Optional per-variable degree caps: arithmetic drops any term exceeding a
// cap, and result caps combine componentwise. Exact division requires
// uncapped operands.
class MultiPoly {
 public:
  using Exponents = std::vector<int>;

  struct GrlexLess {
    bool operator()(const Exponents& a, const Exponents& b) const;
  };
  using TermMap = std::map<Exponents, BigInt, GrlexLess>;

  explicit MultiPoly(int nvars);
  MultiPoly(int nvars, std::vector<int> caps);

  static MultiPoly constant(int nvars, BigInt c);
  static MultiPoly variable(int nvars, int index);  // x_{index}, 0-based

  int nvars() const { return nvars_; }
  const std::optional<std::vector<int>>& caps() const { return caps_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  // Stored coefficient, or zero (also zero outside caps).
  const BigInt& coeff(const Exponents& e) const;

  void add_term(const Exponents& e, const BigInt& c);

  MultiPoly with_caps(std::vector<int> caps) const;  // re-cap (drops terms)

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly operator-() const;

  // Exact quotient num/den under grlex leading-term elimination. Throws
  // std::domain_error if den == 0, if operands are capped, or if the division
  // leaves a remainder.
  static MultiPoly exact_div(const MultiPoly& num, const MultiPoly& den);

  // Substitute x_i = x^i (1-based i) and truncate at n_max: coefficient of
  // x^n is the sum over exponent vectors e with sum(i*e_i) == n.
  TruncSeries substitute_powers(long n_max) const;

  bool operator==(const MultiPoly& other) const;

  std::string str() const;

 private:
  bool within_caps(const Exponents& e) const;

  int nvars_;
  std::optional<std::vector<int>> caps_;
  TermMap terms_;
};

}  // namespace patavoid
