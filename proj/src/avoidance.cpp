#include "patavoid/avoidance.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <vector>

#include "patavoid/jobs.hpp"

namespace patavoid {

namespace {

constexpr long long kNegInf = std::numeric_limits<long long>::min();
constexpr long long kPosInf = std::numeric_limits<long long>::max();

// Strictly increasing triple, scanning [begin, end).
template <typename It>
bool increasing_triple_scan(It begin, It end) {
  long long best_first = kPosInf;   // smallest value seen
  long long best_second = kPosInf;  // smallest value with a smaller one before it
  for (It it = begin; it != end; ++it) {
    const long long x = *it;
    if (x > best_second) return true;
    if (x > best_first) best_second = std::min(best_second, x);
    best_first = std::min(best_first, x);
  }
  return false;
}

// Occurrence of (1,3,2), scanning the word right to left over [begin, end)
// (pass reverse iterators for the usual orientation). `middle` holds the
// largest value known to have a strictly larger value earlier in the word;
// any later-scanned value below it completes the pattern.
template <typename It>
bool stack132_scan(It begin, It end, int sign) {
  long long middle = kNegInf;
  std::vector<long long> stack;
  for (It it = begin; it != end; ++it) {
    const long long x = static_cast<long long>(*it) * sign;
    if (x < middle) return true;
    while (!stack.empty() && stack.back() < x) {
      middle = stack.back();
      stack.pop_back();
    }
    stack.push_back(x);
  }
  return false;
}

// Strictly increasing subsequence of length >= r via patience sorting.
bool has_increasing_run(const Word& w, int r) {
  std::vector<int> tails;  // tails[t] = least tail of an increasing run of length t+1
  for (int x : w) {
    auto it = std::lower_bound(tails.begin(), tails.end(), x);
    if (it == tails.end()) {
      tails.push_back(x);
      if (static_cast<int>(tails.size()) >= r) return true;
    } else {
      *it = x;
    }
  }
  return false;
}

bool dfs_contains(const Word& w, const std::vector<int>& perm,
                  std::size_t start, std::vector<int>& chosen) {
  const std::size_t m = perm.size();
  const std::size_t t = chosen.size();
  if (t == m) return true;
  for (std::size_t pos = start; pos + (m - t) <= w.size(); ++pos) {
    const int v = w[pos];
    bool feasible = true;
    for (std::size_t s = 0; s < t; ++s) {
      if (perm[s] < perm[t] ? !(chosen[s] < v) : !(chosen[s] > v)) {
        feasible = false;
        break;
      }
    }
    if (!feasible) continue;
    chosen.push_back(v);
    if (dfs_contains(w, perm, pos + 1, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

void require_valid(const Pattern& p) {
  if (!validate_pattern(p)) {
    throw std::invalid_argument("invalid pattern: " + pattern_name(p));
  }
}

}  // namespace

bool contains_naive(const Word& w, const Pattern& p) {
  require_valid(p);
  std::vector<int> chosen;
  chosen.reserve(p.perm.size());
  return dfs_contains(w, p.perm, 0, chosen);
}

bool contains(const Word& w, const Pattern& p) {
  require_valid(p);
  if (p.length() == 3) {
    const auto& q = p.perm;
    if (q[0] == 1 && q[1] == 2) return increasing_triple_scan(w.begin(), w.end());
    if (q[0] == 3 && q[1] == 2) return increasing_triple_scan(w.rbegin(), w.rend());
    if (q[0] == 1 && q[1] == 3) return stack132_scan(w.rbegin(), w.rend(), +1);
    if (q[0] == 2 && q[1] == 3) return stack132_scan(w.begin(), w.end(), +1);
    if (q[0] == 3 && q[1] == 1) return stack132_scan(w.rbegin(), w.rend(), -1);
    return stack132_scan(w.begin(), w.end(), -1);  // (2,1,3)
  }
  if (p.is_increasing()) return has_increasing_run(w, p.length());
  return contains_naive(w, p);
}

Word reverse_word(const Word& w) { return Word(w.rbegin(), w.rend()); }

Word complement_word(const Word& w, int k) {
  Word out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] < 1 || w[i] > k) {
      throw std::domain_error("complement requires letters in 1..k");
    }
    out[i] = k + 1 - w[i];
  }
  return out;
}

MultisetPermutationStream::MultisetPermutationStream(const MultisetSpec& spec) {
  if (!spec.is_normalized()) {
    throw std::invalid_argument("enumeration requires a normalized spec");
  }
  for (int letter = 1; letter <= spec.k(); ++letter) {
    const int count = spec.mult[static_cast<std::size_t>(letter - 1)];
    first_.insert(first_.end(), static_cast<std::size_t>(count), letter);
  }
}

std::optional<Word> MultisetPermutationStream::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    current_ = first_;
    return current_;
  }
  if (std::next_permutation(current_.begin(), current_.end())) {
    return current_;
  }
  done_ = true;
  return std::nullopt;
}

void MultisetPermutationStream::reset() {
  started_ = false;
  done_ = false;
  current_.clear();
}

CompositionStream::CompositionStream(CompositionQuery q) : query_(std::move(q)) {
  query_.validate();
  cap_ = query_.max_part ? std::min<long>(*query_.max_part, query_.n) : query_.n;
}

std::optional<Word> CompositionStream::first() const {
  const long n = query_.n;
  if (!query_.part_count) {
    // positive parts, any length
    if (n == 0) return Word{};
    if (cap_ < 1) return std::nullopt;
    return Word(static_cast<std::size_t>(n), 1);
  }
  const int k = *query_.part_count;
  const long lo = query_.flavor == PartsFlavor::positive ? 1 : 0;
  if (k == 0) return n == 0 ? std::optional<Word>(Word{}) : std::nullopt;
  if (n < lo * k || n > cap_ * k) return std::nullopt;
  Word w(static_cast<std::size_t>(k));
  long rem = n;
  for (int t = 0; t < k; ++t) {
    const long v = std::max(lo, rem - cap_ * (k - 1 - t));
    w[static_cast<std::size_t>(t)] = static_cast<int>(v);
    rem -= v;
  }
  return w;
}

bool CompositionStream::advance(Word& w) const {
  if (!query_.part_count) {
    long freed = 0;
    while (!w.empty()) {
      freed += w.back();
      w.pop_back();
      if (!w.empty() && w.back() < cap_) {
        ++w.back();
        w.insert(w.end(), static_cast<std::size_t>(freed - 1), 1);
        return true;
      }
    }
    return false;
  }
  const int k = *query_.part_count;
  const long lo = query_.flavor == PartsFlavor::positive ? 1 : 0;
  if (k <= 1) return false;
  long tail = w.back();  // sum of w[j..k-1] as j moves left
  for (int j = k - 2; j >= 0; --j) {
    tail += w[static_cast<std::size_t>(j)];
    const long rest = k - 1 - j;
    const long v = std::max<long>(w[static_cast<std::size_t>(j)] + 1,
                                  tail - cap_ * rest);
    if (v <= cap_ && v <= tail - lo * rest) {
      w[static_cast<std::size_t>(j)] = static_cast<int>(v);
      long rem = tail - v;
      for (int t = j + 1; t < k; ++t) {
        const long u = std::max(lo, rem - cap_ * (k - 1 - t));
        w[static_cast<std::size_t>(t)] = static_cast<int>(u);
        rem -= u;
      }
      return true;
    }
  }
  return false;
}

std::optional<Word> CompositionStream::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    current_ = first();
    if (!current_) done_ = true;
    return current_;
  }
  if (current_ && advance(*current_)) return current_;
  done_ = true;
  return std::nullopt;
}

void CompositionStream::reset() {
  started_ = false;
  done_ = false;
  current_.reset();
}

namespace {

// Counts avoiders among permutations of `letters` (consumed sorted) with an
// optional fixed leading letter.
BigInt count_avoiders_of_letters(Word letters, std::optional<int> head,
                                 const Pattern& p) {
  std::sort(letters.begin(), letters.end());
  Word w;
  w.reserve(letters.size() + (head ? 1 : 0));
  if (head) w.push_back(*head);
  w.insert(w.end(), letters.begin(), letters.end());
  const std::size_t fixed = head ? 1 : 0;
  BigInt count = 0;
  do {
    if (!contains(w, p)) ++count;
  } while (std::next_permutation(w.begin() + static_cast<long>(fixed), w.end()));
  return count;
}

}  // namespace

AvoidanceCount count_avoiders_multiset(const MultisetSpec& spec,
                                        const Pattern& p, int jobs) {
  require_valid(p);
  const MultisetSpec norm = normalize_spec(spec);
  Word letters;
  for (int letter = 1; letter <= norm.k(); ++letter) {
    const int count = norm.mult[static_cast<std::size_t>(letter - 1)];
    letters.insert(letters.end(), static_cast<std::size_t>(count), letter);
  }
  const int workers = effective_jobs(jobs);
  if (workers <= 1 || norm.k() <= 1) {
    return count_avoiders_of_letters(letters, std::nullopt, p);
  }
  // one task per choice of first letter
  std::vector<BigInt> partial(static_cast<std::size_t>(norm.k()));
  parallel_for_index(static_cast<std::size_t>(norm.k()), workers,
                     [&](std::size_t idx) {
                       const int head = static_cast<int>(idx) + 1;
                       Word rest = letters;
                       rest.erase(std::find(rest.begin(), rest.end(), head));
                       partial[idx] = count_avoiders_of_letters(rest, head, p);
                     });
  BigInt total = 0;
  for (const BigInt& c : partial) total += c;
  return total;
}

namespace {

BigInt count_avoiders_in_stream(CompositionStream stream, const Pattern& p,
                                std::optional<int> head) {
  BigInt count = 0;
  Word buffer;
  while (auto w = stream.next()) {
    if (head) {
      buffer.assign(1, *head);
      buffer.insert(buffer.end(), w->begin(), w->end());
      if (!contains(buffer, p)) ++count;
    } else if (!contains(*w, p)) {
      ++count;
    }
  }
  return count;
}

}  // namespace

AvoidanceCount count_avoiding_compositions(const CompositionQuery& q,
                                            const Pattern& p, int jobs) {
  require_valid(p);
  q.validate();
  const int workers = effective_jobs(jobs);
  const long cap = q.max_part ? std::min<long>(*q.max_part, q.n) : q.n;
  const bool fixed = q.part_count.has_value();
  const int k = fixed ? *q.part_count : 0;

  if (workers <= 1 || q.n == 0 || (fixed && k <= 1)) {
    return count_avoiders_in_stream(CompositionStream(q), p, std::nullopt);
  }

  // one task per choice of first part
  const long lo = (!fixed || q.flavor == PartsFlavor::positive) ? 1
                  : 0;
  long first_lo = lo;
  long first_hi = std::min(cap, q.n - (fixed ? lo * (k - 1) : 0));
  if (fixed) first_lo = std::max(lo, q.n - cap * (k - 1));
  if (first_hi < first_lo) return 0;

  const std::size_t tasks = static_cast<std::size_t>(first_hi - first_lo + 1);
  std::vector<BigInt> partial(tasks);
  parallel_for_index(tasks, workers, [&](std::size_t idx) {
    const int head = static_cast<int>(first_lo + static_cast<long>(idx));
    CompositionQuery tail = q;
    tail.n = q.n - head;
    if (fixed) tail.part_count = k - 1;
    partial[idx] = count_avoiders_in_stream(CompositionStream(tail), p, head);
  });
  BigInt total = 0;
  for (const BigInt& c : partial) total += c;
  return total;
}

BigInt count_all_compositions(const CompositionQuery& q) {
  q.validate();
  const long cap = q.max_part ? std::min<long>(*q.max_part, q.n) : q.n;
  const bool uncapped = cap >= q.n;
  if (uncapped) {
    if (!q.part_count) {
      return q.n == 0 ? BigInt(1) : BigInt(1) << (q.n - 1);
    }
    const int k = *q.part_count;
    if (q.flavor == PartsFlavor::positive) return binomial(q.n - 1, k - 1);
    return binomial(q.n + k - 1, q.n);
  }
  CompositionStream stream{q};
  BigInt count = 0;
  while (stream.next()) ++count;
  return count;
}

}  // namespace patavoid
