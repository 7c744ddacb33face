// SPDX-FileCopyrightText: 2026 Contributors to the mcbe project.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>

#include "mcbe/ladder.hpp"

namespace mcbe {

/// RFC 6381 CODECS value used in playlists. Known ids: avc, hevc, av1, vvc;
/// anything else is passed through unchanged.
std::string hls_codecs_attribute(std::string_view codec_id);

/// HLS master playlist with one #EXT-X-STREAM-INF entry per retained rung,
/// in codec priority order and ascending bitrate. Variant URIs are
/// "<codec>/<width>x<height>_<bitrate>.m3u8".
std::string hls_master_playlist(const OptimizedLadder& ladder);

/// Rate-quality export "codec,bitrate_bps,vmaf,retained" covering retained
/// and eliminated rungs, grouped by codec priority and ascending bitrate.
std::string rd_curve_csv(const OptimizedLadder& ladder);

}  // namespace mcbe
