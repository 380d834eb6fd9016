#pragma once

#include <string>
#include <vector>

#include "patavoid/types.hpp"

namespace patavoid {

struct SuiteResult {
  bool ok = true;
  long checks = 0;
  std::string failure;  // first counterexample, empty when ok

  void fail(const std::string& what) {
    if (ok) {
      ok = false;
      failure = what;
    }
  }
};

// Reference terms of the avoiding-composition count for n = 1..13, the ground
// truth every other route is validated against.
const std::vector<long>& reference_avoider_sequence();

// All multiplicity vectors with 1 <= k <= max_k parts, entries >= 1, total
// letters <= max_total, in lexicographic order.
std::vector<MultisetSpec> specs_up_to(int max_k, int max_total);

// Each suite runs one invariant family at desk scale and reports the first
// counterexample on failure. jobs > 1 spreads independent instances over
// worker threads; results are deterministic.

// Brute-force composition counts equal the reference sequence for every
// length-3 pattern, n = 1..n_max.
SuiteResult verify_thm1(int n_max = 13, int jobs = 1);

// For n <= n_max, all part counts k <= n, both part flavors: the six pattern
// counts coincide.
SuiteResult verify_thm2(int n_max = 12, int jobs = 1);

// For every spec with k <= max_k and total <= max_total: the six pattern
// counts coincide.
SuiteResult verify_thm3(int max_k = 4, int max_total = 10, int jobs = 1);

// Avoider counts are invariant under permuting the multiplicity vector.
SuiteResult verify_symmetry(int max_k = 4, int max_total = 10, int jobs = 1);

// The adjacent-swap bijection: reference 19-letter example, exhaustive
// bijectivity plus (123)- and (1234)-preservation over all source/target
// pairs with k <= max_k and total <= max_total, and the (132) counterexample
// showing single-letter flips cannot work for that pattern.
SuiteResult verify_bijection(int max_k = 4, int max_total = 9, int jobs = 1);

// Generating functions against the brute-force oracle: univariate
// coefficients for n <= n_max at several part caps, multivariate coefficient
// extraction for small specs, and the substitution cross-check between the
// two routes.
SuiteResult verify_gf_cross(int n_max = 13, int jobs = 1);

}  // namespace patavoid
