// End-to-end tests of the command-line interface: flags, exit codes, output
// formats, the b-file byte format, JSON structure against the shipped schema,
// and determinism. Expects the binary path as argv[1] and the schema path as
// argv[2].

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

int g_failures = 0;

#define CHECK_MSG(cond, msg)                                              \
  do {                                                                    \
    if (!(cond)) {                                                        \
      std::cerr << "[FAIL] " << __FILE__ << ":" << __LINE__ << "  " << msg \
                << "\n";                                                  \
      ++g_failures;                                                       \
    }                                                                     \
  } while (0)

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout + stderr
};

std::string g_binary;

RunResult run(const std::string& args, const std::string& env_prefix = "") {
  const std::string cmd = env_prefix + g_binary + " " + args + " 2>&1";
  RunResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    result.output = "popen failed";
    return result;
  }
  char buffer[4096];
  std::size_t got;
  while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0) {
    result.output.append(buffer, got);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: test_cli <binary> <schema.json>\n";
    return 1;
  }
  g_binary = argv[1];
  const std::string schema_path = argv[2];

  // --- counts and exit codes ---------------------------------------------
  {
    const RunResult r = run("compositions --n 6 --pattern 132 --no-timing");
    CHECK_MSG(r.exit_code == 0, "count exit code: " << r.output);
    CHECK_MSG(r.output == "31\n", "count output was '" << r.output << "'");
  }
  {
    const RunResult r = run("compositions --n 6 --all-patterns --no-timing");
    CHECK_MSG(r.exit_code == 0, "all-patterns exit code");
    CHECK_MSG(r.output ==
                  "123 31\n132 31\n213 31\n231 31\n312 31\n321 31\n",
              "all-patterns output was '" << r.output << "'");
  }
  {
    const RunResult r =
        run("compositions --n 2 --flavor nonnegative --pattern 132");
    CHECK_MSG(r.exit_code == 2, "nonnegative without --k must be usage error");
  }
  {
    const RunResult r = run("compositions --n 5 --pattern 991");
    CHECK_MSG(r.exit_code == 2, "invalid pattern must be usage error");
  }
  {
    const RunResult r = run("compositions --n 5");
    CHECK_MSG(r.exit_code == 2, "missing pattern selection must fail");
  }
  {
    const RunResult r =
        run("compositions --n 3 --pattern 132 --list --no-timing");
    CHECK_MSG(r.exit_code == 0, "list exit code");
    CHECK_MSG(r.output == "4\n1 1 1\n1 2\n2 1\n3\n",
              "list output was '" << r.output << "'");
  }
  {
    const RunResult r = run(
        "compositions --n 6 --flavor nonnegative --k 3 --pattern 132 "
        "--no-timing");
    const RunResult all = run(
        "compositions --n 6 --flavor nonnegative --k 3 --all-patterns "
        "--no-timing");
    CHECK_MSG(r.exit_code == 0 && all.exit_code == 0, "nonnegative counts");
    // all six lines must agree with the single-pattern count
    std::istringstream is(all.output);
    std::string line;
    while (std::getline(is, line)) {
      CHECK_MSG(line.substr(4) == r.output.substr(0, r.output.size() - 1),
                "pattern-independence in CLI output: " << line);
    }
  }

  // --- multiset ------------------------------------------------------------
  {
    const RunResult brute =
        run("multiset 2 1 1 --pattern 132 --engine brute --no-timing");
    const RunResult gf =
        run("multiset 2 1 1 --pattern 132 --engine gf --no-timing");
    CHECK_MSG(brute.exit_code == 0 && brute.output == "9\n",
              "multiset brute gave '" << brute.output << "'");
    CHECK_MSG(gf.exit_code == 0 && gf.output == "9\n",
              "multiset gf gave '" << gf.output << "'");
  }
  {
    const RunResult r = run("multiset 2 1 1 --pattern 123 --engine gf");
    CHECK_MSG(r.exit_code == 2, "gf engine must reject patterns other than 132");
  }

  // --- series / bfile ------------------------------------------------------
  {
    const RunResult r = run("series --n-max 13 --no-timing");
    CHECK_MSG(r.exit_code == 0, "series exit code");
    CHECK_MSG(r.output ==
                  "1 2 4 8 16 31 60 114 214 398 732 1334 2410\n",
              "series output was '" << r.output << "'");
  }
  {
    const RunResult r = run("series --n-max 5 --max-part 1 --no-timing");
    CHECK_MSG(r.output == "1 1 1 1 1\n",
              "capped series output was '" << r.output << "'");
  }
  {
    const RunResult r = run("bfile --n-max 3");
    CHECK_MSG(r.exit_code == 0, "bfile exit code");
    CHECK_MSG(r.output == "1 1\n2 2\n3 4\n",
              "bfile bytes were '" << r.output << "'");
  }

  // --- bijection -----------------------------------------------------------
  {
    const RunResult r = run(
        "bijection 7 5 6 6 4 6 6 4 6 6 4 6 5 3 2 4 1 1 4 "
        "--target 2 1 1 2 5 7 1 --no-timing");
    CHECK_MSG(r.exit_code == 0, "bijection exit code: " << r.output);
    CHECK_MSG(r.output == "7 5 6 6 5 6 6 5 6 6 4 6 5 3 2 5 1 1 4\n",
              "bijection output was '" << r.output << "'");
  }
  {
    const RunResult r = run("bijection 1 2 --target 3");
    CHECK_MSG(r.exit_code == 2, "mismatched target must be a domain error");
    CHECK_MSG(r.output.find("error") != std::string::npos,
              "domain error message expected, got '" << r.output << "'");
  }

  // --- verify ---------------------------------------------------------------
  {
    const RunResult r = run("verify thm1 --no-timing");
    CHECK_MSG(r.exit_code == 0, "verify thm1 exit code: " << r.output);
    CHECK_MSG(r.output.find("thm1: PASS") == 0,
              "verify output was '" << r.output << "'");
  }
  {
    const RunResult r = run("verify nonsense");
    CHECK_MSG(r.exit_code == 2, "unknown suite must be usage error");
  }

  // --- formats ---------------------------------------------------------------
  {
    const RunResult r =
        run("compositions --n 6 --pattern 132 --json --no-timing");
    CHECK_MSG(r.exit_code == 0, "json exit code");
    const auto j = nlohmann::json::parse(r.output, nullptr, false);
    CHECK_MSG(!j.is_discarded(), "json output must parse");
    CHECK_MSG(j["command"] == "compositions", "json command echo");
    CHECK_MSG(j["parameters"]["n"] == 6, "json parameter echo");
    CHECK_MSG(j["results"]["count"] == "31", "json count as decimal string");
    CHECK_MSG(!j.contains("timing_ms"), "timing suppressed");
    // envelope fields only
    for (auto it = j.begin(); it != j.end(); ++it) {
      CHECK_MSG(it.key() == "command" || it.key() == "parameters" ||
                    it.key() == "results" || it.key() == "timing_ms",
                "unexpected envelope field " << it.key());
    }
    // round-trip
    CHECK_MSG(nlohmann::json::parse(j.dump()) == j, "json round-trip");
  }
  {
    const RunResult r = run("compositions --n 6 --pattern 132 --json");
    const auto j = nlohmann::json::parse(r.output, nullptr, false);
    CHECK_MSG(!j.is_discarded() && j.contains("timing_ms"),
              "timing present by default");
  }
  {
    const RunResult r =
        run("compositions --n 6 --all-patterns --csv --no-timing");
    CHECK_MSG(r.output.substr(0, 14) == "pattern,count\n",
              "csv header, got '" << r.output << "'");
    CHECK_MSG(r.output.find("132,31\n") != std::string::npos, "csv rows");
  }
  {
    const RunResult r = run("verify thm1 --json --no-timing");
    const auto j = nlohmann::json::parse(r.output, nullptr, false);
    CHECK_MSG(!j.is_discarded(), "verify json parses");
    CHECK_MSG(j["results"]["ok"] == true, "verify ok field");
    CHECK_MSG(j["results"]["checks"] == 78, "verify checks field");
  }

  // --- determinism ------------------------------------------------------------
  {
    const std::string cmd = "multiset 2 2 1 --pattern 321 --json --no-timing";
    const RunResult a = run(cmd);
    const RunResult b = run(cmd);
    CHECK_MSG(a.output == b.output, "reruns must be byte-identical");
  }
  {
    const RunResult plain = run("series --n-max 4");
    CHECK_MSG(plain.output.find("# time_ms ") != std::string::npos,
              "plain timing line present by default");
  }

  // --- jobs and the environment default ---------------------------------------
  {
    const RunResult seq = run("compositions --n 9 --pattern 213 --no-timing");
    const RunResult par =
        run("compositions --n 9 --pattern 213 --jobs 3 --no-timing");
    const RunResult env = run("compositions --n 9 --pattern 213 --no-timing",
                              "PATAVOID_JOBS=2 ");
    CHECK_MSG(seq.output == par.output, "--jobs must not change results");
    CHECK_MSG(seq.output == env.output, "env jobs must not change results");
    CHECK_MSG(seq.output == "214\n", "n=9 count");
  }
  {
    const RunResult r = run("compositions --n 4 --pattern 132", "PATAVOID_JOBS=zap ");
    CHECK_MSG(r.exit_code == 2, "bad PATAVOID_JOBS must be a usage error");
  }
  {
    const RunResult r = run("compositions --n 4 --pattern 132 --list --csv");
    CHECK_MSG(r.exit_code == 2, "--list with --csv must be a usage error");
  }
  {
    const RunResult r = run("bfile --n-max 3 --json");
    CHECK_MSG(r.exit_code == 2, "bfile has a fixed byte format, no --json");
  }

  // --- schema -------------------------------------------------------------------
  {
    std::ifstream in(schema_path);
    CHECK_MSG(in.good(), "schema file readable at " << schema_path);
    nlohmann::json schema;
    in >> schema;
    CHECK_MSG(schema["type"] == "object", "schema root type");
    const auto required = schema["required"];
    CHECK_MSG(required.size() == 3, "schema requires the envelope fields");
    for (const auto& field : {"command", "parameters", "results"}) {
      bool found = false;
      for (const auto& r : required) found = found || r == field;
      CHECK_MSG(found, "schema must require " << field);
    }
    // every field the CLI emits is declared
    const auto& props = schema["properties"];
    for (const auto& field :
         {"command", "parameters", "results", "timing_ms"}) {
      CHECK_MSG(props.contains(field), "schema must declare " << field);
    }
    const auto& result_props = schema["properties"]["results"]["properties"];
    for (const auto& field : {"count", "counts", "words", "coefficients",
                              "word", "suite", "ok", "checks", "failure"}) {
      CHECK_MSG(result_props.contains(field),
                "schema must declare results." << field);
    }
    // spot-check an actual record against the declared result fields
    const RunResult r = run("bijection 1 1 2 --target 1 2 --json --no-timing");
    const auto j = nlohmann::json::parse(r.output, nullptr, false);
    CHECK_MSG(!j.is_discarded(), "bijection json parses");
    for (auto it = j["results"].begin(); it != j["results"].end(); ++it) {
      CHECK_MSG(result_props.contains(it.key()),
                "undeclared results field " << it.key());
    }
  }

  if (g_failures == 0) {
    std::cout << "test_cli: all checks passed\n";
    return 0;
  }
  std::cerr << "test_cli: " << g_failures << " failures\n";
  return 1;
}
