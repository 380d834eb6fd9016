#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "output.hpp"
#include "patavoid/avoidance.hpp"
#include "patavoid/bijection.hpp"
#include "patavoid/genfun.hpp"
#include "patavoid/verify.hpp"

namespace {

using namespace patavoid;
using cli::OutputFormat;
using cli::OutputOptions;
using cli::OutputRecord;

// exit codes: 0 success, 1 verification failure, 2 usage/domain error
constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct FormatFlags {
  bool json = false;
  bool csv = false;
  bool no_timing = false;
};

void add_format_flags(CLI::App* sub, FormatFlags& flags) {
  auto* json_opt = sub->add_flag("--json", flags.json, "emit a JSON record");
  auto* csv_opt = sub->add_flag("--csv", flags.csv, "emit CSV rows");
  csv_opt->excludes(json_opt);
  sub->add_flag("--no-timing", flags.no_timing,
                "suppress the timing field (byte-identical reruns)");
}

OutputOptions resolve_format(const FormatFlags& flags) {
  OutputOptions opts;
  opts.format = flags.json  ? OutputFormat::json
                : flags.csv ? OutputFormat::csv
                            : OutputFormat::plain;
  opts.timing = !flags.no_timing;
  return opts;
}

std::string word_text(const Word& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(w[i]);
  }
  return s;
}

template <typename Fill>
int run_command(const FormatFlags& flags, Fill&& fill) {
  const auto start = std::chrono::steady_clock::now();
  OutputRecord rec = fill();
  const double elapsed_ms =
      std::chrono::duration<double, std::milli>(
          std::chrono::steady_clock::now() - start)
          .count();
  emit_record(rec, resolve_format(flags), elapsed_ms, std::cout);
  return kExitOk;
}

struct CompositionsArgs {
  long n = 0;
  std::string flavor = "positive";
  std::optional<int> k;
  std::optional<int> max_part;
  std::string pattern;
  bool all_patterns = false;
  bool list = false;
  int jobs = 1;
  FormatFlags fmt;
};

int run_compositions(const CompositionsArgs& a) {
  CompositionQuery q;
  q.n = a.n;
  q.flavor = a.flavor == "positive" ? PartsFlavor::positive
                                    : PartsFlavor::nonnegative;
  q.part_count = a.k;
  q.max_part = a.max_part;
  q.validate();
  if (!a.all_patterns && a.pattern.empty()) {
    throw std::invalid_argument("need --pattern or --all-patterns");
  }
  return run_command(a.fmt, [&] {
    OutputRecord rec;
    rec.command = "compositions";
    rec.parameters["n"] = a.n;
    rec.parameters["flavor"] = a.flavor;
    if (a.k) rec.parameters["k"] = *a.k;
    if (a.max_part) rec.parameters["max_part"] = *a.max_part;
    rec.parameters["jobs"] = a.jobs;
    if (a.all_patterns) {
      rec.parameters["all_patterns"] = true;
      auto counts = nlohmann::ordered_json::object();
      rec.csv_rows.push_back({"pattern", "count"});
      for (const Pattern& p : all_s3_patterns()) {
        const std::string value =
            count_avoiding_compositions(q, p, a.jobs).str();
        counts[pattern_name(p)] = value;
        rec.plain_lines.push_back(pattern_name(p) + " " + value);
        rec.csv_rows.push_back({pattern_name(p), value});
      }
      rec.results["counts"] = counts;
    } else {
      const Pattern p = Pattern::parse(a.pattern);
      rec.parameters["pattern"] = a.pattern;
      const std::string value =
          count_avoiding_compositions(q, p, a.jobs).str();
      rec.results["count"] = value;
      rec.plain_lines.push_back(value);
      rec.csv_rows.push_back({"pattern", "count"});
      rec.csv_rows.push_back({a.pattern, value});
      if (a.list) {
        auto words = nlohmann::json::array();
        CompositionStream stream(q);
        while (auto w = stream.next()) {
          if (contains(*w, p)) continue;
          words.push_back(*w);
          rec.plain_lines.push_back(word_text(*w));
        }
        rec.results["words"] = words;
      }
    }
    return rec;
  });
}

struct MultisetArgs {
  std::vector<int> mult;
  std::string pattern;
  std::string engine = "brute";
  int jobs = 1;
  FormatFlags fmt;
};

int run_multiset(const MultisetArgs& a) {
  const MultisetSpec spec{a.mult};
  const Pattern p = Pattern::parse(a.pattern);
  if (a.engine == "gf" && !(p == Pattern({1, 3, 2}))) {
    throw std::invalid_argument(
        "engine gf extracts coefficients of the (132) series only; use "
        "--engine brute for other patterns");
  }
  return run_command(a.fmt, [&] {
    const BigInt count = a.engine == "gf"
                             ? f132_via_gf(spec)
                             : count_avoiders_multiset(spec, p, a.jobs);
    OutputRecord rec;
    rec.command = "multiset";
    rec.parameters["mult"] = a.mult;
    rec.parameters["pattern"] = a.pattern;
    rec.parameters["engine"] = a.engine;
    rec.parameters["jobs"] = a.jobs;
    rec.results["count"] = count.str();
    rec.plain_lines.push_back(count.str());
    rec.csv_rows.push_back({"pattern", "count"});
    rec.csv_rows.push_back({a.pattern, count.str()});
    return rec;
  });
}

struct SeriesArgs {
  long n_max = 1;
  std::optional<int> max_part;
  FormatFlags fmt;
};

int run_series(const SeriesArgs& a) {
  return run_command(a.fmt, [&] {
    const int cap =
        a.max_part ? *a.max_part : static_cast<int>(a.n_max);
    const TruncSeries series = composition_gf(a.n_max, cap);
    OutputRecord rec;
    rec.command = "series";
    rec.parameters["n_max"] = a.n_max;
    rec.parameters["max_part"] = cap;
    auto coeffs = nlohmann::json::array();
    std::string line;
    rec.csv_rows.push_back({"n", "coefficient"});
    for (long n = 1; n <= a.n_max; ++n) {
      const std::string value = series.coeff(n).str();
      coeffs.push_back(value);
      if (n > 1) line += ' ';
      line += value;
      rec.csv_rows.push_back({std::to_string(n), value});
    }
    rec.results["coefficients"] = coeffs;
    rec.plain_lines.push_back(line);
    return rec;
  });
}

int run_bfile(long n_max) {
  const TruncSeries series =
      composition_gf(n_max, static_cast<int>(n_max));
  for (long n = 1; n <= n_max; ++n) {
    std::cout << n << ' ' << series.coeff(n).str() << '\n';
  }
  return kExitOk;
}

struct BijectionArgs {
  std::vector<int> word;
  std::vector<int> target;
  FormatFlags fmt;
};

int run_bijection(const BijectionArgs& a) {
  return run_command(a.fmt, [&] {
    const Word image = theta(a.word, MultisetSpec(a.target));
    OutputRecord rec;
    rec.command = "bijection";
    rec.parameters["word"] = a.word;
    rec.parameters["target"] = a.target;
    rec.results["word"] = image;
    rec.plain_lines.push_back(word_text(image));
    rec.csv_rows.push_back({"position", "letter"});
    for (std::size_t i = 0; i < image.size(); ++i) {
      rec.csv_rows.push_back(
          {std::to_string(i + 1), std::to_string(image[i])});
    }
    return rec;
  });
}

struct VerifyArgs {
  std::string suite;
  int jobs = 1;
  FormatFlags fmt;
};

int run_verify(const VerifyArgs& a) {
  SuiteResult result;
  run_command(a.fmt, [&] {
    if (a.suite == "thm1") {
      result = verify_thm1(13, a.jobs);
    } else if (a.suite == "thm2") {
      result = verify_thm2(12, a.jobs);
    } else if (a.suite == "thm3") {
      result = verify_thm3(4, 10, a.jobs);
    } else if (a.suite == "symmetry") {
      result = verify_symmetry(4, 10, a.jobs);
    } else if (a.suite == "bijection") {
      result = verify_bijection(4, 9, a.jobs);
    } else {
      result = verify_gf_cross(13, a.jobs);
    }
    OutputRecord rec;
    rec.command = "verify";
    rec.parameters["suite"] = a.suite;
    rec.parameters["jobs"] = a.jobs;
    rec.results["suite"] = a.suite;
    rec.results["ok"] = result.ok;
    rec.results["checks"] = result.checks;
    rec.results["failure"] = result.failure;
    std::string line = a.suite + ": " +
                       (result.ok ? "PASS" : "FAIL") + " (" +
                       std::to_string(result.checks) + " checks)";
    if (!result.ok) line += " counterexample: " + result.failure;
    rec.plain_lines.push_back(line);
    rec.csv_rows.push_back({"suite", "ok", "checks", "failure"});
    rec.csv_rows.push_back({a.suite, result.ok ? "true" : "false",
                            std::to_string(result.checks), result.failure});
    return rec;
  });
  return result.ok ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "patavoid: exact counting and bijections for pattern-avoiding "
      "compositions and multiset permutations"};
  app.require_subcommand(1);

  // PATAVOID_JOBS provides the default for every --jobs option.
  int default_jobs = 1;
  if (const char* env = std::getenv("PATAVOID_JOBS")) {
    char* end = nullptr;
    const long parsed = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || parsed < 0 || parsed > 4096) {
      std::cerr << "error: PATAVOID_JOBS must be an integer in 0..4096, got \""
                << env << "\"\n";
      return kExitUsage;
    }
    default_jobs = static_cast<int>(parsed);
  }

  CompositionsArgs comp_args;
  auto* comp = app.add_subcommand(
      "compositions", "count pattern-avoiding compositions of n");
  comp->add_option("--n", comp_args.n, "target sum")->required();
  comp->add_option("--flavor", comp_args.flavor,
                   "part flavor: positive or nonnegative")
      ->check(CLI::IsMember({"positive", "nonnegative"}));
  comp->add_option("--k", comp_args.k, "fixed number of parts");
  comp->add_option("--max-part", comp_args.max_part, "cap on part values");
  auto* pat_opt =
      comp->add_option("--pattern", comp_args.pattern, "pattern digits, e.g. 132");
  auto* all_opt = comp->add_flag("--all-patterns", comp_args.all_patterns,
                                 "report all six length-3 patterns");
  all_opt->excludes(pat_opt);
  auto* list_opt = comp->add_flag("--list", comp_args.list,
                                  "also print the avoiding compositions");
  list_opt->excludes(all_opt);
  comp_args.jobs = default_jobs;
  comp->add_option("--jobs", comp_args.jobs,
                   "worker threads (0 = all cores)")
      ->check(CLI::Range(0, 4096));
  add_format_flags(comp, comp_args.fmt);
  list_opt->excludes(comp->get_option("--csv"));

  MultisetArgs ms_args;
  auto* ms = app.add_subcommand(
      "multiset", "count pattern-avoiding permutations of a multiset");
  ms->add_option("mult", ms_args.mult, "multiplicities a_1 a_2 ...")
      ->required();
  ms->add_option("--pattern", ms_args.pattern, "pattern digits, e.g. 132")
      ->required();
  ms->add_option("--engine", ms_args.engine,
                 "brute (enumeration) or gf (coefficient extraction)")
      ->check(CLI::IsMember({"brute", "gf"}));
  ms_args.jobs = default_jobs;
  ms->add_option("--jobs", ms_args.jobs, "worker threads (0 = all cores)")
      ->check(CLI::Range(0, 4096));
  add_format_flags(ms, ms_args.fmt);

  SeriesArgs ser_args;
  auto* ser = app.add_subcommand(
      "series", "coefficients of the avoiding-composition series");
  ser->add_option("--n-max", ser_args.n_max, "highest coefficient to print")
      ->required()
      ->check(CLI::Range(1, 100000));
  ser->add_option("--max-part", ser_args.max_part, "part bound")
      ->check(CLI::Range(1, 100000));
  add_format_flags(ser, ser_args.fmt);

  long bfile_n_max = 1;
  auto* bf = app.add_subcommand("bfile",
                                "emit the series as OEIS b-file lines");
  bf->add_option("--n-max", bfile_n_max, "highest index to emit")
      ->required()
      ->check(CLI::Range(1, 100000));

  BijectionArgs bij_args;
  auto* bij = app.add_subcommand(
      "bijection", "apply the multiplicity-swapping bijection to a word");
  bij->add_option("word", bij_args.word, "letters of the source word")
      ->required();
  bij->add_option("--target", bij_args.target, "target multiplicities")
      ->required();
  add_format_flags(bij, bij_args.fmt);

  VerifyArgs verify_args;
  auto* vf = app.add_subcommand("verify", "run an invariant suite");
  vf->add_option("suite", verify_args.suite,
                 "thm1|thm2|thm3|symmetry|bijection|gf-cross")
      ->required()
      ->check(CLI::IsMember(
          {"thm1", "thm2", "thm3", "symmetry", "bijection", "gf-cross"}));
  verify_args.jobs = default_jobs;
  vf->add_option("--jobs", verify_args.jobs, "worker threads (0 = all cores)")
      ->check(CLI::Range(0, 4096));
  add_format_flags(vf, verify_args.fmt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (comp->parsed()) return run_compositions(comp_args);
    if (ms->parsed()) return run_multiset(ms_args);
    if (ser->parsed()) return run_series(ser_args);
    if (bf->parsed()) return run_bfile(bfile_n_max);
    if (bij->parsed()) return run_bijection(bij_args);
    if (vf->parsed()) return run_verify(verify_args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}
