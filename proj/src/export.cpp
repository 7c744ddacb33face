// SPDX-FileCopyrightText: 2026 Contributors to the mcbe project.
// SPDX-License-Identifier: Apache-2.0

#include "mcbe/export.hpp"

#include <algorithm>
#include <vector>

#include <fmt/core.h>

namespace mcbe {

namespace {

struct Row {
  std::size_t codec_rank;
  const Rung* rung;
  bool retained;
};

std::vector<Row> ordered_rows(const OptimizedLadder& ladder, bool include_eliminated) {
  auto rank = [&](const std::string& id) {
    for (std::size_t i = 0; i < ladder.codecs.size(); ++i) {
      if (ladder.codecs[i].id == id) return i;
    }
    return ladder.codecs.size();
  };
  std::vector<Row> rows;
  for (const auto& r : ladder.retained) rows.push_back({rank(r.codec), &r, true});
  if (include_eliminated) {
    for (const auto& e : ladder.eliminated) rows.push_back({rank(e.rung.codec), &e.rung, false});
  }
  std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    if (a.codec_rank != b.codec_rank) return a.codec_rank < b.codec_rank;
    return a.rung->bitrate < b.rung->bitrate;
  });
  return rows;
}

}  // namespace

std::string hls_codecs_attribute(std::string_view codec_id) {
  if (codec_id == "avc") return "avc1.640028";
  if (codec_id == "hevc") return "hvc1.1.6.L150.90";
  if (codec_id == "av1") return "av01.0.12M.08";
  if (codec_id == "vvc") return "vvc1.1.L123.CQA";
  return std::string(codec_id);
}

std::string hls_master_playlist(const OptimizedLadder& ladder) {
  std::string out = "#EXTM3U\n#EXT-X-VERSION:7\n#EXT-X-INDEPENDENT-SEGMENTS\n";
  for (const auto& row : ordered_rows(ladder, false)) {
    const Rung& r = *row.rung;
    out += fmt::format("#EXT-X-STREAM-INF:BANDWIDTH={},RESOLUTION={}x{},CODECS=\"{}\"\n",
                       r.bitrate, r.resolution.width, r.resolution.height,
                       hls_codecs_attribute(r.codec));
    out += fmt::format("{}/{}x{}_{}.m3u8\n", r.codec, r.resolution.width, r.resolution.height,
                       r.bitrate);
  }
  return out;
}

std::string rd_curve_csv(const OptimizedLadder& ladder) {
  std::string out = "codec,bitrate_bps,vmaf,retained\n";
  for (const auto& row : ordered_rows(ladder, true)) {
    const Rung& r = *row.rung;
    const std::string vmaf = r.vmaf ? fmt::format("{:.6f}", *r.vmaf) : std::string();
    out += fmt::format("{},{},{},{}\n", r.codec, r.bitrate, vmaf, row.retained ? 1 : 0);
  }
  return out;
}

}  // namespace mcbe
