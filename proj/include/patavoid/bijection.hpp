#pragma once

#include <vector>

#include "patavoid/types.hpp"

namespace patavoid {

// Parenthesis matching of the two-letter subalphabet {focus, focus+1}:
// the focus letter acts as '(' and focus+1 as ')'. Matching is the standard
// stack pairing; every unmatched close precedes every unmatched open.
enum class ParenRole : unsigned char { open, close, other };

struct ParenView {
  Word word;
  int focus = 0;
  std::vector<ParenRole> roles;       // per position
  std::vector<int> partner;           // matched position, or -1
  std::vector<int> unmatched_opens;   // ascending 0-based positions
  std::vector<int> unmatched_closes;  // ascending 0-based positions
};

ParenView match_parens(const Word& w, int focus);

// Flips the leftmost unmatched focus letter to focus+1. Requires at least one
// unmatched open (std::domain_error otherwise). Leaves every matched pair
// matched to the same partner; the flipped position becomes the rightmost
// unmatched close.
Word tau(const Word& w, int focus);

// Flips the rightmost unmatched focus+1 letter back to focus. Exact inverse
// of tau. Requires at least one unmatched close.
Word tau_inverse(const Word& w, int focus);

// Swaps the multiplicities of letters index and index+1 (1-based): with
// d = a_index - a_{index+1}, applies tau d times (d > 0), tau_inverse |d|
// times (d < 0), or nothing (d == 0). The result is a permutation of the
// multiset with the two multiplicities exchanged, and the map is a bijection.
Word theta_adjacent(const Word& w, int index);

// Carries a permutation of M(a) to a permutation of M(target), where target
// rearranges a = word_multiset(w) (std::domain_error otherwise). Composition
// of theta_adjacent steps along a fixed bubble schedule: repeatedly take the
// leftmost position p where the current vector disagrees with target, find
// the nearest position q > p holding the needed value, and bubble it left one
// adjacent swap at a time. For a fixed (source, target) pair the map is a
// bijection and preserves containment of increasing patterns.
Word theta(const Word& w, const MultisetSpec& target);

}  // namespace patavoid
