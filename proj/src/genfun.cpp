#include "patavoid/genfun.hpp"

#include <algorithm>
#include <stdexcept>

namespace patavoid {

GfTermPlan gf_term_plan(int i, int k) {
  if (i < 1 || i > k) throw std::invalid_argument("term index out of range");
  GfTermPlan plan;
  plan.index = i;
  plan.sign = (i % 2 == 1) ? 1 : -1;           // (-1)^(i-1)
  plan.net_shift = static_cast<long>(i) * (i - 1) / 2;
  plan.numerator_geom.assign(static_cast<std::size_t>(k - 1), i);
  plan.denominator_geom.push_back(i);
  for (int j = 1; j <= k; ++j) {
    if (j == i) continue;
    plan.denominator_geom.push_back(std::abs(j - i));
    plan.denominator_pair.emplace_back(i, j);
  }
  return plan;
}

TruncSeries gf_term(const GfTermPlan& plan, long n_max) {
  TruncSeries term =
      plan.sign == 1 ? TruncSeries::one(n_max) : -TruncSeries::one(n_max);
  for (long d : plan.numerator_geom) {
    term = term * TruncSeries::one_minus_xpow(d, n_max);
  }
  for (long d : plan.denominator_geom) {
    term = term * TruncSeries::one_minus_xpow(d, n_max).inverse();
  }
  for (const auto& [i, j] : plan.denominator_pair) {
    // 1 - x^i - x^j
    TruncSeries tri = TruncSeries::one(n_max) -
                      TruncSeries::monomial(1, i, n_max) -
                      TruncSeries::monomial(1, j, n_max);
    term = term * tri.inverse();
  }
  return term.shifted(plan.net_shift);
}

TruncSeries composition_gf(long n_max, int max_part) {
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  if (max_part < 1) throw std::invalid_argument("max_part must be >= 1");
  // Parts larger than n_max cannot occur in any composition of n <= n_max,
  // so the coefficients up to n_max are unchanged by clamping the outer sum.
  const int k = static_cast<int>(std::min<long>(max_part, n_max));
  TruncSeries total = TruncSeries::zero(n_max);
  for (int i = 1; i <= k; ++i) {
    // the i-th term starts at x^{i(i-1)/2}
    if (static_cast<long>(i) * (i - 1) / 2 > n_max) break;
    total = total + gf_term(gf_term_plan(i, k), n_max);
  }
  if (total.offset() < 0) {
    throw std::logic_error("composition series has a negative net offset");
  }
  for (long n = total.offset(); n <= n_max; ++n) {
    if (total.coeff(n) < 0) {
      throw std::logic_error("composition series has a negative coefficient");
    }
  }
  return total;
}

namespace {

// Truncated expansion of 1/(1 - x_p - x_q): sum of binomial(a+b, a)
// x_p^a x_q^b over the cap box.
MultiPoly geometric_pair(int k, int p, int q, const std::vector<int>& caps) {
  MultiPoly out(k, caps);
  MultiPoly::Exponents e(static_cast<std::size_t>(k), 0);
  for (int a = 0; a <= caps[static_cast<std::size_t>(p)]; ++a) {
    for (int b = 0; b <= caps[static_cast<std::size_t>(q)]; ++b) {
      e[static_cast<std::size_t>(p)] = a;
      e[static_cast<std::size_t>(q)] = b;
      out.add_term(e, binomial(a + b, a));
    }
  }
  return out;
}

MultiPoly variable_diff(int k, int p, int q) {  // x_p - x_q
  return MultiPoly::variable(k, p) - MultiPoly::variable(k, q);
}

MultiPoly pair_trinomial(int k, int p, int q) {  // 1 - x_p - x_q
  return MultiPoly::constant(k, 1) - MultiPoly::variable(k, p) -
         MultiPoly::variable(k, q);
}

}  // namespace

MultiPoly g_k_series(int k, const std::vector<int>& caps) {
  if (k < 2) throw std::invalid_argument("g_k_series requires k >= 2");
  if (static_cast<int>(caps.size()) != k) {
    throw std::invalid_argument("caps size must equal k");
  }

  // Vandermonde product and the polynomial numerator, both exact.
  MultiPoly vandermonde = MultiPoly::constant(k, 1);
  for (int p = 0; p < k; ++p) {
    for (int q = p + 1; q < k; ++q) {
      vandermonde = vandermonde * variable_diff(k, p, q);
    }
  }

  MultiPoly numerator(k);
  for (int i = 0; i < k; ++i) {
    MultiPoly term = MultiPoly::constant(k, (i % 2 == 0) ? 1 : -1);
    MultiPoly::Exponents head(static_cast<std::size_t>(k), 0);
    head[static_cast<std::size_t>(i)] = k - 1;
    MultiPoly head_poly(k);
    head_poly.add_term(head, 1);
    term = term * head_poly;
    const MultiPoly one_minus_xi =
        MultiPoly::constant(k, 1) - MultiPoly::variable(k, i);
    for (int rep = 0; rep < k - 2; ++rep) term = term * one_minus_xi;
    for (int p = 0; p < k; ++p) {
      for (int q = p + 1; q < k; ++q) {
        if (p == i || q == i) continue;
        term = term * variable_diff(k, p, q);
        term = term * pair_trinomial(k, p, q);
      }
    }
    numerator = numerator + term;
  }

  // The numerator is alternating, so the Vandermonde divides it exactly; a
  // remainder here means the assembly above is wrong.
  const MultiPoly quotient = MultiPoly::exact_div(numerator, vandermonde);

  MultiPoly result = quotient.with_caps(caps);
  for (int p = 0; p < k; ++p) {
    for (int q = p + 1; q < k; ++q) {
      result = result * geometric_pair(k, p, q, caps);
    }
  }
  for (const auto& [e, c] : result.terms()) {
    if (c < 0) {
      throw std::logic_error("avoider series has a negative coefficient");
    }
  }
  return result;
}

BigInt f132_via_gf(const MultisetSpec& spec) {
  const int k = spec.k();
  if (k <= 1) return 1;  // at most one distinct letter: every word avoids
  const MultiPoly g = g_k_series(k, spec.mult);
  return g.coeff(spec.mult);
}

bool sanity_check_eq1_vs_eq2(long n_max, int k) {
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  const TruncSeries univariate = composition_gf(n_max, k);
  if (k == 1) {
    // only all-ones compositions: coefficient 1 everywhere
    for (long n = 0; n <= n_max; ++n) {
      if (univariate.coeff(n) != 1) return false;
    }
    return true;
  }
  std::vector<int> caps(static_cast<std::size_t>(k));
  for (int i = 1; i <= k; ++i) {
    caps[static_cast<std::size_t>(i - 1)] = static_cast<int>(n_max / i);
  }
  const TruncSeries substituted =
      g_k_series(k, caps).substitute_powers(n_max);
  for (long n = 0; n <= n_max; ++n) {
    if (substituted.coeff(n) != univariate.coeff(n)) return false;
  }
  return true;
}

}  // namespace patavoid
