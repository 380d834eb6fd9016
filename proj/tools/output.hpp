#pragma once

#include <json.hpp>

#include <ostream>
#include <string>
#include <vector>

namespace patavoid::cli {

// One record per invocation: command echo, parameter echo, results, timing.
// Counts are rendered as decimal strings so arbitrary-precision values
// survive JSON round-trips.
struct OutputRecord {
  std::string command;
  nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
  nlohmann::ordered_json results = nlohmann::ordered_json::object();
  std::vector<std::string> plain_lines;
  std::vector<std::vector<std::string>> csv_rows;  // first row is the header
};

enum class OutputFormat { plain, json, csv };

struct OutputOptions {
  OutputFormat format = OutputFormat::plain;
  bool timing = true;
};

std::string csv_escape(const std::string& field);

void emit_record(const OutputRecord& rec, const OutputOptions& opts,
                 double elapsed_ms, std::ostream& os);

}  // namespace patavoid::cli
