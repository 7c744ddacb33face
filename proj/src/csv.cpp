// SPDX-FileCopyrightText: 2026 Contributors to the mcbe project.
// SPDX-License-Identifier: Apache-2.0

#include "mcbe/csv.hpp"

#include <charconv>
#include <cmath>

#include <fmt/core.h>

#include "mcbe/error.hpp"

namespace mcbe::csv {

namespace {

std::vector<std::string> split(std::string_view line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    out.emplace_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

std::vector<Row> parse(std::string_view text, std::string_view expected_header) {
  std::vector<Row> rows;
  bool header_seen = false;
  const std::size_t columns = split(expected_header).size();
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t") == std::string_view::npos) continue;

    if (!header_seen) {
      if (line != expected_header) {
        throw DataError(fmt::format("line {}: expected header '{}', got '{}'", line_no,
                                    expected_header, line));
      }
      header_seen = true;
      continue;
    }
    Row row{line_no, split(line)};
    if (row.fields.size() != columns) {
      throw DataError(fmt::format("line {}: expected {} fields, got {}", line_no, columns,
                                  row.fields.size()));
    }
    rows.push_back(std::move(row));
  }
  if (!header_seen) {
    throw DataError(fmt::format("missing CSV header '{}'", expected_header));
  }
  return rows;
}

double to_double(const Row& row, std::size_t column, std::string_view name) {
  const std::string& s = row.fields.at(column);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(value)) {
    throw DataError(fmt::format("line {}: invalid {} '{}'", row.line, name, s));
  }
  return value;
}

long long to_int(const Row& row, std::size_t column, std::string_view name) {
  const std::string& s = row.fields.at(column);
  long long value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw DataError(fmt::format("line {}: invalid {} '{}'", row.line, name, s));
  }
  return value;
}

}  // namespace mcbe::csv
