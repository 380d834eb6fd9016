#include "patavoid/verify.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <vector>

#include "patavoid/avoidance.hpp"
#include "patavoid/bijection.hpp"
#include "patavoid/genfun.hpp"
#include "patavoid/jobs.hpp"

namespace patavoid {

namespace {

using Check = std::function<std::string()>;  // empty string = pass

SuiteResult run_checks(const std::vector<Check>& checks, int jobs) {
  std::vector<std::string> outcomes(checks.size());
  parallel_for_index(checks.size(), jobs,
                     [&](std::size_t i) { outcomes[i] = checks[i](); });
  SuiteResult result;
  result.checks = static_cast<long>(checks.size());
  for (const auto& msg : outcomes) {
    if (!msg.empty()) {
      result.fail(msg);
      break;
    }
  }
  return result;
}

std::string word_str(const Word& w) {
  std::ostringstream os;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) os << ' ';
    os << w[i];
  }
  return os.str();
}

std::string vec_str(const std::vector<int>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << ')';
  return os.str();
}

void collect_specs(int max_k, int max_total, std::vector<int>& prefix,
                   std::vector<MultisetSpec>& out) {
  if (!prefix.empty()) out.emplace_back(prefix);
  if (static_cast<int>(prefix.size()) == max_k) return;
  long used = 0;
  for (int a : prefix) used += a;
  for (int a = 1; a <= max_total - used; ++a) {
    prefix.push_back(a);
    collect_specs(max_k, max_total, prefix, out);
    prefix.pop_back();
  }
}

const Pattern kP123{{1, 2, 3}};
const Pattern kP132{{1, 3, 2}};
const Pattern kP1234{{1, 2, 3, 4}};

// Reference 19-letter adjacent-swap example and its image.
const Word kExampleInput = {7, 5, 6, 6, 4, 6, 6, 4, 6, 6,
                            4, 6, 5, 3, 2, 4, 1, 1, 4};
const Word kExampleOutput = {7, 5, 6, 6, 5, 6, 6, 5, 6, 6,
                             4, 6, 5, 3, 2, 5, 1, 1, 4};
const std::vector<int> kExampleTarget = {2, 1, 1, 2, 5, 7, 1};

}  // namespace

const std::vector<long>& reference_avoider_sequence() {
  static const std::vector<long> seq = {1,   2,   4,   8,   16,  31,  60,
                                        114, 214, 398, 732, 1334, 2410};
  return seq;
}

std::vector<MultisetSpec> specs_up_to(int max_k, int max_total) {
  std::vector<MultisetSpec> out;
  std::vector<int> prefix;
  collect_specs(max_k, max_total, prefix, out);
  return out;
}

SuiteResult verify_thm1(int n_max, int jobs) {
  const auto& seq = reference_avoider_sequence();
  n_max = std::min<int>(n_max, static_cast<int>(seq.size()));
  std::vector<Check> checks;
  for (int n = 1; n <= n_max; ++n) {
    for (const Pattern& p : all_s3_patterns()) {
      checks.emplace_back([n, &seq, p]() -> std::string {
        CompositionQuery q;
        q.n = n;
        const BigInt got = count_avoiding_compositions(q, p);
        if (got == seq[static_cast<std::size_t>(n - 1)]) return {};
        std::ostringstream os;
        os << "n=" << n << " pattern=" << pattern_name(p) << ": got " << got
           << ", reference " << seq[static_cast<std::size_t>(n - 1)];
        return os.str();
      });
    }
  }
  return run_checks(checks, jobs);
}

SuiteResult verify_thm2(int n_max, int jobs) {
  std::vector<Check> checks;
  for (int n = 1; n <= n_max; ++n) {
    for (int k = 1; k <= n; ++k) {
      for (PartsFlavor flavor :
           {PartsFlavor::positive, PartsFlavor::nonnegative}) {
        checks.emplace_back([n, k, flavor]() -> std::string {
          CompositionQuery q;
          q.n = n;
          q.flavor = flavor;
          q.part_count = k;
          BigInt first;
          for (std::size_t idx = 0; idx < all_s3_patterns().size(); ++idx) {
            const BigInt got =
                count_avoiding_compositions(q, all_s3_patterns()[idx]);
            if (idx == 0) {
              first = got;
            } else if (got != first) {
              std::ostringstream os;
              os << "n=" << n << " k=" << k << " flavor="
                 << (flavor == PartsFlavor::positive ? "positive"
                                                     : "nonnegative")
                 << ": pattern "
                 << pattern_name(all_s3_patterns()[idx]) << " gives " << got
                 << " but "
                 << pattern_name(all_s3_patterns()[0]) << " gives " << first;
              return os.str();
            }
          }
          return {};
        });
      }
    }
  }
  return run_checks(checks, jobs);
}

SuiteResult verify_thm3(int max_k, int max_total, int jobs) {
  std::vector<Check> checks;
  for (const MultisetSpec& spec : specs_up_to(max_k, max_total)) {
    checks.emplace_back([spec]() -> std::string {
      BigInt first;
      for (std::size_t idx = 0; idx < all_s3_patterns().size(); ++idx) {
        const BigInt got =
            count_avoiders_multiset(spec, all_s3_patterns()[idx]);
        if (idx == 0) {
          first = got;
        } else if (got != first) {
          std::ostringstream os;
          os << "spec=" << vec_str(spec.mult) << ": pattern "
             << pattern_name(all_s3_patterns()[idx]) << " gives " << got
             << " but " << pattern_name(all_s3_patterns()[0]) << " gives "
             << first;
          return os.str();
        }
      }
      return {};
    });
  }
  return run_checks(checks, jobs);
}

SuiteResult verify_symmetry(int max_k, int max_total, int jobs) {
  std::vector<Check> checks;
  for (const MultisetSpec& spec : specs_up_to(max_k, max_total)) {
    std::vector<int> sorted = spec.mult;
    std::sort(sorted.begin(), sorted.end());
    if (sorted == spec.mult) continue;  // canonical form, nothing to compare
    const MultisetSpec canon{sorted};
    checks.emplace_back([spec, canon]() -> std::string {
      for (const Pattern& p : all_s3_patterns()) {
        const BigInt lhs = count_avoiders_multiset(spec, p);
        const BigInt rhs = count_avoiders_multiset(canon, p);
        if (lhs != rhs) {
          std::ostringstream os;
          os << "pattern " << pattern_name(p) << ": f" << vec_str(spec.mult)
             << "=" << lhs << " differs from f" << vec_str(canon.mult) << "="
             << rhs;
          return os.str();
        }
      }
      return {};
    });
  }
  return run_checks(checks, jobs);
}

namespace {

std::string check_bijection_pair(const MultisetSpec& source,
                                 const MultisetSpec& target) {
  MultisetPermutationStream stream(source);
  std::set<Word> images;
  long total = 0;
  while (auto w = stream.next()) {
    ++total;
    const Word image = theta(*w, target);
    if (!(word_multiset(image) == target)) {
      return "theta image " + word_str(image) + " of " + word_str(*w) +
             " is not a permutation of " + vec_str(target.mult);
    }
    if (!images.insert(image).second) {
      return "theta is not injective on " + vec_str(source.mult) + " -> " +
             vec_str(target.mult) + " (duplicate image " + word_str(image) +
             ")";
    }
    const bool keeps123 = contains(*w, kP123) == contains(image, kP123);
    const bool keeps1234 = contains(*w, kP1234) == contains(image, kP1234);
    if (!keeps123 || !keeps1234) {
      return std::string("theta broke ") + (keeps123 ? "(1234)" : "(123)") +
             " containment: " + word_str(*w) + " -> " + word_str(image);
    }
  }
  if (static_cast<long>(images.size()) != total) {
    return "image count mismatch for " + vec_str(source.mult);
  }
  return {};
}

std::set<Word> containing_132(const MultisetSpec& spec) {
  std::set<Word> out;
  MultisetPermutationStream stream(spec);
  while (auto w = stream.next()) {
    if (contains(*w, kP132)) out.insert(*w);
  }
  return out;
}

// True iff each source word can be assigned a distinct image in `targets`
// obtained by flipping exactly one letter 1 to 2.
bool single_flip_matching_exists(const std::vector<Word>& sources,
                                 const std::set<Word>& targets) {
  std::vector<std::vector<Word>> options;
  for (const Word& w : sources) {
    std::vector<Word> opts;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i] != 1) continue;
      Word flipped = w;
      flipped[i] = 2;
      if (targets.count(flipped)) opts.push_back(flipped);
    }
    options.push_back(std::move(opts));
  }
  std::vector<Word> picked;
  std::function<bool(std::size_t)> assign = [&](std::size_t idx) {
    if (idx == options.size()) return true;
    for (const Word& choice : options[idx]) {
      if (std::find(picked.begin(), picked.end(), choice) != picked.end()) {
        continue;
      }
      picked.push_back(choice);
      if (assign(idx + 1)) return true;
      picked.pop_back();
    }
    return false;
  };
  return assign(0);
}

}  // namespace

SuiteResult verify_bijection(int max_k, int max_total, int jobs) {
  std::vector<Check> checks;

  // Reference example: adjacent swap of the 4th and 5th multiplicities.
  checks.emplace_back([]() -> std::string {
    const Word via_adjacent = theta_adjacent(kExampleInput, 4);
    if (via_adjacent != kExampleOutput) {
      return "adjacent swap on the 19-letter example produced " +
             word_str(via_adjacent);
    }
    const Word via_theta = theta(kExampleInput, MultisetSpec(kExampleTarget));
    if (via_theta != kExampleOutput) {
      return "theta on the 19-letter example produced " + word_str(via_theta);
    }
    return {};
  });

  // The (132) witness: the containing sets cannot be matched by single
  // letter flips, which is why the swap map only works for increasing
  // patterns.
  checks.emplace_back([]() -> std::string {
    const std::set<Word> first = containing_132(MultisetSpec({2, 1, 1}));
    const std::set<Word> second = containing_132(MultisetSpec({1, 2, 1}));
    const std::set<Word> expect_first = {
        {1, 1, 3, 2}, {1, 3, 1, 2}, {1, 3, 2, 1}};
    const std::set<Word> expect_second = {
        {2, 1, 3, 2}, {1, 2, 3, 2}, {1, 3, 2, 2}};
    if (first != expect_first) return "(132)-containing set of (2,1,1) wrong";
    if (second != expect_second) {
      return "(132)-containing set of (1,2,1) wrong";
    }
    const std::vector<Word> sources(first.begin(), first.end());
    if (single_flip_matching_exists(sources, second)) {
      return "unexpected single-flip matching between the (132) sets";
    }
    return {};
  });

  for (const MultisetSpec& source : specs_up_to(max_k, max_total)) {
    std::vector<int> arrangement = source.mult;
    std::sort(arrangement.begin(), arrangement.end());
    do {
      const MultisetSpec target{arrangement};
      checks.emplace_back([source, target]() -> std::string {
        return check_bijection_pair(source, target);
      });
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));
  }
  return run_checks(checks, jobs);
}

SuiteResult verify_gf_cross(int n_max, int jobs) {
  std::vector<Check> checks;

  std::vector<int> caps = {1, 2, 3, static_cast<int>(n_max)};
  for (int cap : caps) {
    checks.emplace_back([cap, n_max]() -> std::string {
      const TruncSeries series = composition_gf(n_max, cap);
      for (long n = 0; n <= n_max; ++n) {
        CompositionQuery q;
        q.n = n;
        q.max_part = cap;
        const BigInt brute = count_avoiding_compositions(q, kP132);
        if (series.coeff(n) != brute) {
          std::ostringstream os;
          os << "max_part=" << cap << " n=" << n << ": series gives "
             << series.coeff(n) << ", brute force gives " << brute;
          return os.str();
        }
      }
      return {};
    });
  }

  for (int k = 1; k <= 3; ++k) {
    std::vector<int> mult(static_cast<std::size_t>(k), 1);
    for (;;) {
      const MultisetSpec spec{mult};
      checks.emplace_back([spec]() -> std::string {
        const BigInt via_gf = f132_via_gf(spec);
        const BigInt brute = count_avoiders_multiset(spec, kP132);
        if (via_gf != brute) {
          std::ostringstream os;
          os << "spec=" << vec_str(spec.mult) << ": coefficient " << via_gf
             << " != brute count " << brute;
          return os.str();
        }
        return {};
      });
      int pos = k - 1;
      while (pos >= 0 && mult[static_cast<std::size_t>(pos)] == 3) {
        mult[static_cast<std::size_t>(pos)] = 1;
        --pos;
      }
      if (pos < 0) break;
      ++mult[static_cast<std::size_t>(pos)];
    }
  }

  for (auto [n, k] : std::vector<std::pair<long, int>>{{10, 3}, {6, 2}, {1, 1}}) {
    checks.emplace_back([n, k]() -> std::string {
      if (!sanity_check_eq1_vs_eq2(n, k)) {
        std::ostringstream os;
        os << "substitution cross-check failed at n_max=" << n << " k=" << k;
        return os.str();
      }
      return {};
    });
  }

  return run_checks(checks, jobs);
}

}  // namespace patavoid
