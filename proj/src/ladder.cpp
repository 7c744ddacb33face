// SPDX-FileCopyrightText: 2026 Contributors to the mcbe project.
// SPDX-License-Identifier: Apache-2.0

#include "mcbe/ladder.hpp"

#include <algorithm>
#include <charconv>
#include <set>

#include <fmt/core.h>

#include "mcbe/error.hpp"

namespace mcbe {

namespace {

int parse_positive_int(std::string_view text, std::string_view context) {
  int value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || value <= 0) {
    throw DataError(fmt::format("invalid resolution '{}'", context));
  }
  return value;
}

}  // namespace

std::string Resolution::key() const {
  if (!label.empty()) return label;
  return fmt::format("{}p", height);
}

Resolution parse_resolution(std::string_view text) {
  if (const auto x = text.find('x'); x != std::string_view::npos) {
    return Resolution{parse_positive_int(text.substr(0, x), text),
                      parse_positive_int(text.substr(x + 1), text), {}};
  }
  if (!text.empty() && text.back() == 'p') {
    const int height = parse_positive_int(text.substr(0, text.size() - 1), text);
    // 16:9 width rounded to the nearest even value.
    const int width = static_cast<int>((height * 16 / 9 + 1) / 2 * 2);
    return Resolution{width, height, std::string(text)};
  }
  throw DataError(fmt::format("invalid resolution '{}'", text));
}

std::vector<std::string> default_resolution_set() {
  return {"360p", "432p", "540p", "720p", "1080p", "1440p", "2160p"};
}

const CodecLadder* MultiCodecLadder::find(std::string_view codec_id) const {
  for (const auto& c : codecs) {
    if (c.codec.id == codec_id) return &c;
  }
  return nullptr;
}

CodecLadder* MultiCodecLadder::find(std::string_view codec_id) {
  for (auto& c : codecs) {
    if (c.codec.id == codec_id) return &c;
  }
  return nullptr;
}

std::size_t MultiCodecLadder::rung_count() const {
  std::size_t n = 0;
  for (const auto& c : codecs) n += c.rungs.size();
  return n;
}

MultiCodecLadder validate_ladder(MultiCodecLadder ladder) {
  if (ladder.codecs.empty()) throw DataError("ladder has no codecs");

  std::set<std::string> ids;
  for (const auto& c : ladder.codecs) {
    if (c.codec.id.empty()) throw DataError("codec id must not be empty");
    if (!ids.insert(c.codec.id).second) {
      throw DataError(fmt::format("duplicate codec id '{}'", c.codec.id));
    }
  }

  std::stable_sort(ladder.codecs.begin(), ladder.codecs.end(),
                   [](const CodecLadder& a, const CodecLadder& b) {
                     return a.codec.priority < b.codec.priority;
                   });
  for (std::size_t i = 0; i < ladder.codecs.size(); ++i) {
    if (ladder.codecs[i].codec.priority != static_cast<int>(i)) {
      throw DataError(fmt::format(
          "codec priorities must be unique and contiguous from 0 (codec '{}' has {})",
          ladder.codecs[i].codec.id, ladder.codecs[i].codec.priority));
    }
  }

  for (auto& c : ladder.codecs) {
    if (c.rungs.empty()) {
      throw DataError(fmt::format("codec '{}' has no rungs", c.codec.id));
    }
    for (const auto& r : c.rungs) {
      if (r.codec != c.codec.id) {
        throw DataError(fmt::format("rung tagged '{}' filed under codec '{}'",
                                    r.codec, c.codec.id));
      }
      if (r.resolution.width <= 0 || r.resolution.height <= 0 ||
          r.resolution.width % 2 != 0 || r.resolution.height % 2 != 0) {
        throw DataError(fmt::format("codec '{}': resolution {}x{} must be positive and even",
                                    c.codec.id, r.resolution.width, r.resolution.height));
      }
      if (r.bitrate <= 0) {
        throw DataError(fmt::format("codec '{}': bitrate must be positive, got {}",
                                    c.codec.id, r.bitrate));
      }
      if (r.vmaf && !(*r.vmaf >= 0.0 && *r.vmaf <= 100.0)) {
        throw DataError(fmt::format("codec '{}': VMAF {} outside [0, 100]",
                                    c.codec.id, *r.vmaf));
      }
    }
    std::stable_sort(c.rungs.begin(), c.rungs.end(),
                     [](const Rung& a, const Rung& b) { return a.bitrate < b.bitrate; });
    for (std::size_t i = 1; i < c.rungs.size(); ++i) {
      if (c.rungs[i].bitrate == c.rungs[i - 1].bitrate) {
        throw DataError(fmt::format("codec '{}': duplicate bitrate {} bps",
                                    c.codec.id, c.rungs[i].bitrate));
      }
    }
  }
  return ladder;
}

std::string_view to_string(EliminationReason reason) {
  switch (reason) {
    case EliminationReason::kAboveVmax:
      return "above_vmax";
    case EliminationReason::kBelowJnd:
      return "below_jnd";
    case EliminationReason::kBelowBaselineRd:
      return "below_baseline_rd";
  }
  return "unknown";
}

EliminationReason parse_elimination_reason(std::string_view text) {
  if (text == "above_vmax") return EliminationReason::kAboveVmax;
  if (text == "below_jnd") return EliminationReason::kBelowJnd;
  if (text == "below_baseline_rd") return EliminationReason::kBelowBaselineRd;
  throw DataError(fmt::format("unknown elimination reason '{}'", text));
}

std::vector<Rung> OptimizedLadder::retained_for(std::string_view codec_id) const {
  std::vector<Rung> out;
  for (const auto& r : retained) {
    if (r.codec == codec_id) out.push_back(r);
  }
  return out;
}

}  // namespace mcbe
