// SPDX-FileCopyrightText: 2026 Contributors to the mcbe project.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace mcbe::csv {

/// A parsed data row with its 1-based line number in the source text.
struct Row {
  std::size_t line = 0;
  std::vector<std::string> fields;
};

/// Splits plain comma-separated text (no quoting) into rows. Blank lines are
/// skipped. The first non-blank row must equal `expected_header`, otherwise
/// DataError is raised. Every data row must have as many fields as the header.
std::vector<Row> parse(std::string_view text, std::string_view expected_header);

double to_double(const Row& row, std::size_t column, std::string_view name);
long long to_int(const Row& row, std::size_t column, std::string_view name);

}  // namespace mcbe::csv
