// SPDX-FileCopyrightText: 2026 Contributors to the mcbe project.
// SPDX-License-Identifier: Apache-2.0

#include <fmt/core.h>

#include "mcbe/csv.hpp"
#include "mcbe/error.hpp"
#include "mcbe/features.hpp"

namespace mcbe {

namespace {
constexpr std::string_view kHeader = "segment_id,E_Y,h,L_Y";
}

std::string features_to_csv(std::span<const SegmentFeatures> rows) {
  std::string out(kHeader);
  out += '\n';
  for (const auto& f : rows) {
    out += fmt::format("{},{:.6f},{:.6f},{:.6f}\n", f.segment_id, f.texture_energy,
                       f.temporal_gradient, f.luminance);
  }
  return out;
}

std::vector<SegmentFeatures> features_from_csv(std::string_view text) {
  std::vector<SegmentFeatures> out;
  for (const auto& row : csv::parse(text, kHeader)) {
    SegmentFeatures f;
    f.segment_id = row.fields[0];
    if (f.segment_id.empty()) throw DataError(fmt::format("line {}: empty segment_id", row.line));
    f.texture_energy = csv::to_double(row, 1, "E_Y");
    f.temporal_gradient = csv::to_double(row, 2, "h");
    f.luminance = csv::to_double(row, 3, "L_Y");
    if (f.texture_energy < 0 || f.temporal_gradient < 0 || f.luminance < 0 ||
        f.luminance > 255) {
      throw DataError(fmt::format("line {}: feature values out of range", row.line));
    }
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace mcbe
