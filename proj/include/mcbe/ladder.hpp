// SPDX-FileCopyrightText: 2026 Contributors to the mcbe project.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mcbe {

/// Bits per second. Integral so ladder bitrates compare exactly.
using Bitrate = std::int64_t;

struct Codec {
  std::string id;
  /// 0 is the baseline (oldest, universally decodable) codec.
  int priority = 0;

  friend bool operator==(const Codec&, const Codec&) = default;
};

struct Resolution {
  int width = 0;
  int height = 0;
  /// Display label. Empty means "derive from height" (1080 -> "1080p").
  std::string label;

  /// Label used as model-bank key and in reports.
  std::string key() const;

  friend bool operator==(const Resolution& a, const Resolution& b) {
    return a.width == b.width && a.height == b.height;
  }
};

/// Parses "1080p" or "1920x1080" style resolution names. Throws DataError.
Resolution parse_resolution(std::string_view text);

/// Heights of the default resolution set, 360p through 2160p.
std::vector<std::string> default_resolution_set();

struct Rung {
  std::string codec;
  Resolution resolution;
  Bitrate bitrate = 0;
  std::optional<double> vmaf;

  /// Rungs are identified by codec, resolution and bitrate; the VMAF
  /// annotation is not part of the identity.
  bool same_representation(const Rung& other) const {
    return codec == other.codec && resolution == other.resolution &&
           bitrate == other.bitrate;
  }
};

/// All rungs of one codec, ascending by bitrate once validated.
struct CodecLadder {
  Codec codec;
  std::vector<Rung> rungs;
};

/// Per-codec ladders ordered by codec priority (baseline first).
struct MultiCodecLadder {
  std::vector<CodecLadder> codecs;

  const CodecLadder* find(std::string_view codec_id) const;
  CodecLadder* find(std::string_view codec_id);
  std::size_t rung_count() const;
};

/// Checks every ladder invariant and returns the ladder with codecs sorted by
/// priority and rungs sorted by ascending bitrate.
///
/// Rejects: an empty codec list, empty or duplicate codec ids, priorities that
/// are not unique and contiguous from 0, codecs without rungs, rungs filed
/// under the wrong codec, odd or non-positive dimensions, non-positive
/// bitrates, VMAF outside [0, 100] and duplicate bitrates within one codec.
/// Throws DataError.
MultiCodecLadder validate_ladder(MultiCodecLadder ladder);

enum class EliminationReason { kAboveVmax, kBelowJnd, kBelowBaselineRd };

std::string_view to_string(EliminationReason reason);
EliminationReason parse_elimination_reason(std::string_view text);

struct EliminatedRung {
  Rung rung;
  EliminationReason reason;
};

/// Output of redundant-representation elimination. Retained rungs all carry a
/// predicted VMAF; retained and eliminated together partition the input.
struct OptimizedLadder {
  std::vector<Codec> codecs;
  std::vector<Rung> retained;
  std::vector<EliminatedRung> eliminated;

  std::vector<Rung> retained_for(std::string_view codec_id) const;
};

}  // namespace mcbe
