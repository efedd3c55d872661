#include "hoopsnet/csv.hpp"

#include <cstdio>
#include <fstream>
#include <istream>

#include "hoopsnet/error.hpp"

namespace hoopsnet::csv {

namespace {

// Splits the stream into rows of fields, honoring quotes. Returns false at EOF.
bool read_record(std::istream& is, std::size_t& line, Row& out) {
  out.fields.clear();
  std::string field;
  bool in_quotes = false;
  bool any = false;        // consumed at least one character
  bool row_started = false;

  int ci;
  while ((ci = is.get()) != EOF) {
    char c = static_cast<char>(ci);
    if (!row_started) {
      // Comment lines are skipped wholesale.
      if (c == '#') {
        while ((ci = is.get()) != EOF && static_cast<char>(ci) != '\n') {
        }
        ++line;
        continue;
      }
      if (c == '\n') {  // blank line
        ++line;
        continue;
      }
      if (c == '\r') {
        if (is.peek() == '\n') is.get();
        ++line;
        continue;
      }
      row_started = true;
      out.line = line;
    }
    any = true;
    if (in_quotes) {
      if (c == '"') {
        if (is.peek() == '"') {
          field.push_back('"');
          is.get();
        } else {
          in_quotes = false;
        }
      } else {
        if (c == '\n') ++line;
        field.push_back(c);
      }
      continue;
    }
    if (c == '"' && field.empty()) {
      in_quotes = true;
    } else if (c == ',') {
      out.fields.push_back(std::move(field));
      field.clear();
    } else if (c == '\r') {
      if (is.peek() == '\n') is.get();
      ++line;
      out.fields.push_back(std::move(field));
      return true;
    } else if (c == '\n') {
      ++line;
      out.fields.push_back(std::move(field));
      return true;
    } else {
      field.push_back(c);
    }
  }
  if (in_quotes) {
    throw ValidationError("unterminated quoted field at end of input");
  }
  if (any) {
    out.fields.push_back(std::move(field));
    return true;
  }
  return false;
}

}  // namespace

Table read(std::istream& is, std::string_view source_name) {
  Table t;
  t.source = std::string(source_name);
  std::size_t line = 1;
  Row row;
  if (!read_record(is, line, row)) {
    throw ValidationError(t.source + ": empty file, expected a header row");
  }
  t.header = std::move(row.fields);
  while (read_record(is, line, row)) {
    t.rows.push_back(std::move(row));
    row = Row{};
  }
  return t;
}

Table read(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) {
    throw ValidationError(path.string() + ": cannot open file");
  }
  return read(is, path.string());
}

std::string escape(std::string_view field) {
  bool needs_quotes = field.find_first_of(",\"\r\n") != std::string_view::npos;
  if (!needs_quotes) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string format_double(double v, int significant) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", significant, v);
  return buf;
}

}  // namespace hoopsnet::csv
