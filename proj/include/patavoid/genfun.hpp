#pragma once

#include <utility>
#include <vector>

#include "patavoid/series.hpp"
#include "patavoid/types.hpp"

namespace patavoid {

// Assembly plan for the i-th summand of the univariate composition counter
// truncated at parts <= k. Each factor (x^i - x^j) in the raw denominator is
// rewritten as x^min(i,j) * (+-)(1 - x^|i-j|); the signs and powers collected
// over j < i give sign = (-1)^(i-1) and net_shift = i(i-1)/2. Both are
// validated against the reference sequence rather than trusted.
struct GfTermPlan {
  int index = 1;   // outer-sum index i, 1-based
  int sign = 1;    // (-1)^(i-1)
  long net_shift = 0;  // i(i-1)/2

  // d values: numerator carries (1 - x^d) factors, denominator_geom carries
  // 1/(1 - x^d) factors, denominator_pair carries 1/(1 - x^i - x^j).
  std::vector<long> numerator_geom;
  std::vector<long> denominator_geom;
  std::vector<std::pair<long, long>> denominator_pair;
};

GfTermPlan gf_term_plan(int i, int k);

// Expands one plan to a series of truncation order n_max.
TruncSeries gf_term(const GfTermPlan& plan, long n_max);

// Generating function of pattern-avoiding compositions into positive parts
// <= max_part (any length-3 pattern; the count is pattern-independent).
// Coefficient of x^n = number of such compositions of n, for 0 <= n <= n_max.
// Throws std::logic_error if the assembled series has a negative offset or a
// negative coefficient — either signals a sign/shift bug.
TruncSeries composition_gf(long n_max, int max_part);

// Power-series expansion of the k-variable avoider generating function,
// truncated to per-variable degree caps: the coefficient of
// x_1^{a_1}...x_k^{a_k} counts the (132)-avoiding permutations of M(a).
// Assembled as a single polynomial numerator divided exactly by the
// Vandermonde product, then multiplied by the truncated geometric expansions
// of each 1/(1 - x_p - x_q). Requires k >= 2.
MultiPoly g_k_series(int k, const std::vector<int>& caps);

// f(a, (132)) via coefficient extraction; equals the brute-force count.
// Zero multiplicities are accepted directly (exponent 0).
BigInt f132_via_gf(const MultisetSpec& spec);

// Cross-check of the two generating-function routes: substituting x_i = x^i
// into the k-variable expansion must reproduce the univariate series with
// parts <= k, coefficient by coefficient up to n_max.
bool sanity_check_eq1_vs_eq2(long n_max, int k);

}  // namespace patavoid
