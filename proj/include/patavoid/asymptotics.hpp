#pragma once

namespace patavoid {

// The number of avoiding compositions of n into positive parts <= k grows
// like K(k) * r^n with r the golden ratio. These helpers evaluate the
// amplitude K(k), its k -> infinity limit, and convergence diagnostics.

double golden_rate();  // r = (1+sqrt(5))/2

struct GrowthEstimate {
  int part_bound = 0;     // k
  double amplitude = 0;   // K(k)
  double rate = 0;        // r
};

// Closed-form amplitude, k >= 2. The two products run over j = 3..k and are
// empty (= 1) at k = 2.
double K_of_k(int k);

GrowthEstimate growth_estimate(int k);

// Increases k until |K(k) - K(k-1)| < tolerance and returns K(k).
double K_infinity(double tolerance);

// Unique root in (0,1) of x^i + x^j = 1 for 1 <= i < j; bisection refined to
// ~1e-15 residual. The (1,2) root (golden ratio conjugate) is the smallest.
double min_modulus_root(int i, int j);

// c(n,k) / (K(k) * r^n), using the exact generating-function count for
// c(n,k). Approaches 1 as n grows.
double growth_check(long n, int k);

}  // namespace patavoid
