#include "patavoid/bijection.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace patavoid {

ParenView match_parens(const Word& w, int focus) {
  if (focus < 1) throw std::invalid_argument("focus letter must be >= 1");
  ParenView view;
  view.word = w;
  view.focus = focus;
  view.roles.assign(w.size(), ParenRole::other);
  view.partner.assign(w.size(), -1);
  std::vector<int> stack;
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    if (w[pos] == focus) {
      view.roles[pos] = ParenRole::open;
      stack.push_back(static_cast<int>(pos));
    } else if (w[pos] == focus + 1) {
      view.roles[pos] = ParenRole::close;
      if (stack.empty()) {
        view.unmatched_closes.push_back(static_cast<int>(pos));
      } else {
        const int open_pos = stack.back();
        stack.pop_back();
        view.partner[static_cast<std::size_t>(open_pos)] =
            static_cast<int>(pos);
        view.partner[pos] = open_pos;
      }
    }
  }
  view.unmatched_opens = std::move(stack);  // already ascending
  return view;
}

Word tau(const Word& w, int focus) {
  const ParenView view = match_parens(w, focus);
  if (view.unmatched_opens.empty()) {
    throw std::domain_error("tau requires an unmatched open letter");
  }
  Word out = w;
  out[static_cast<std::size_t>(view.unmatched_opens.front())] = focus + 1;
  return out;
}

Word tau_inverse(const Word& w, int focus) {
  const ParenView view = match_parens(w, focus);
  if (view.unmatched_closes.empty()) {
    throw std::domain_error("tau_inverse requires an unmatched close letter");
  }
  Word out = w;
  out[static_cast<std::size_t>(view.unmatched_closes.back())] = focus;
  return out;
}

Word theta_adjacent(const Word& w, int index) {
  if (index < 1) throw std::invalid_argument("letter index must be >= 1");
  long count_low = 0;
  long count_high = 0;
  for (int x : w) {
    if (x == index) ++count_low;
    if (x == index + 1) ++count_high;
  }
  const long d = count_low - count_high;
  Word out = w;
  for (long step = 0; step < d; ++step) out = tau(out, index);
  for (long step = 0; step < -d; ++step) out = tau_inverse(out, index);
  return out;
}

Word theta(const Word& w, const MultisetSpec& target) {
  // Trailing zeros carry no letters, so both vectors are padded to a common
  // length before the rearrangement check.
  MultisetSpec source = word_multiset(w);
  MultisetSpec padded = target;
  const int k = std::max(source.k(), padded.k());
  source.mult.resize(static_cast<std::size_t>(k), 0);
  padded.mult.resize(static_cast<std::size_t>(k), 0);
  if (!padded.is_rearrangement_of(source)) {
    throw std::domain_error(
        "theta target must be a rearrangement of the word's multiplicities");
  }
  Word out = w;
  std::vector<int> current = source.mult;
  for (int p = 0; p < k; ++p) {
    if (current[static_cast<std::size_t>(p)] ==
        padded.mult[static_cast<std::size_t>(p)]) {
      continue;
    }
    int q = -1;
    for (int t = p + 1; t < k; ++t) {
      if (current[static_cast<std::size_t>(t)] ==
          padded.mult[static_cast<std::size_t>(p)]) {
        q = t;
        break;
      }
    }
    // q exists because the two vectors are rearrangements
    for (int j = q; j > p; --j) {
      out = theta_adjacent(out, j);  // swaps multiplicities of letters j, j+1
      std::swap(current[static_cast<std::size_t>(j - 1)],
                current[static_cast<std::size_t>(j)]);
    }
  }
  return out;
}

}  // namespace patavoid
