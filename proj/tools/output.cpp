#include "output.hpp"

#include <iomanip>
#include <sstream>

namespace patavoid::cli {

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

namespace {

std::string format_ms(double elapsed_ms) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << elapsed_ms;
  return os.str();
}

}  // namespace

void emit_record(const OutputRecord& rec, const OutputOptions& opts,
                 double elapsed_ms, std::ostream& os) {
  switch (opts.format) {
    case OutputFormat::plain:
      for (const auto& line : rec.plain_lines) os << line << '\n';
      if (opts.timing) os << "# time_ms " << format_ms(elapsed_ms) << '\n';
      break;
    case OutputFormat::json: {
      nlohmann::ordered_json j;
      j["command"] = rec.command;
      j["parameters"] = rec.parameters;
      j["results"] = rec.results;
      if (opts.timing) j["timing_ms"] = elapsed_ms;
      os << j.dump(2) << '\n';
      break;
    }
    case OutputFormat::csv:
      for (const auto& row : rec.csv_rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
          if (i) os << ',';
          os << csv_escape(row[i]);
        }
        os << '\n';
      }
      if (opts.timing) os << "time_ms," << format_ms(elapsed_ms) << '\n';
      break;
  }
}

}  // namespace patavoid::cli
