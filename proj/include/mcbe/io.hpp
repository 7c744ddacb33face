// SPDX-FileCopyrightText: 2026 Contributors to the mcbe project.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

namespace mcbe {

/// Whole-file helpers. Failures raise IoError naming the path.
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view contents);

/// Reads and parses a JSON document; a syntax error raises DataError.
nlohmann::json read_json_file(const std::filesystem::path& path);

}  // namespace mcbe
