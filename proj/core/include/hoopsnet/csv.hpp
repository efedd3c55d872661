#pragma once

// Minimal RFC-4180 CSV reader/writer. Handles quoted fields, embedded
// commas/newlines, doubled quotes, and both \n and \r\n line endings.
// Lines starting with '#' (outside quotes) are treated as comments and
// skipped, so files carrying `# config_hash=...` metadata re-ingest cleanly.

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace hoopsnet::csv {

struct Row {
  std::size_t line = 0;  // 1-based physical line where the row starts
  std::vector<std::string> fields;
};

struct Table {
  std::string source;  // file name for error messages
  std::vector<std::string> header;
  std::vector<Row> rows;
};

Table read(std::istream& is, std::string_view source_name);
Table read(const std::filesystem::path& path);

// Quotes a field if it contains a comma, quote, or newline.
std::string escape(std::string_view field);

// Formats a double with `significant` significant digits (printf %g).
std::string format_double(double v, int significant);

}  // namespace hoopsnet::csv
