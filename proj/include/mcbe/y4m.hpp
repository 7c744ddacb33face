// SPDX-FileCopyrightText: 2026 Contributors to the mcbe project.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mcbe {

/// One decoded picture. Only the luma plane is kept.
struct Frame {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> luma;  // row-major, width * height samples
  std::int64_t frame_index = 0;
};

struct Y4mHeader {
  int width = 0;
  int height = 0;
  int fps_num = 0;
  int fps_den = 1;
  std::string colorspace = "420jpeg";
  char interlace = 'p';

  double fps() const { return static_cast<double>(fps_num) / fps_den; }
  std::size_t luma_bytes() const;
  std::size_t chroma_bytes() const;  // both 4:2:0 chroma planes together
};

/// Streaming YUV4MPEG2 reader. Accepts 8-bit 4:2:0 (C420, C420jpeg,
/// C420paldv, C420mpeg2, or no C tag). Chroma is read and discarded.
/// All format problems raise DataError.
class Y4mReader {
public:
  explicit Y4mReader(std::istream& in);

  const Y4mHeader& header() const { return header_; }

  /// Next frame, or nullopt at a clean end of stream.
  std::optional<Frame> next();

private:
  std::istream& in_;
  Y4mHeader header_;
  std::int64_t next_index_ = 0;
  std::vector<char> chroma_scratch_;
};

struct Y4mVideo {
  Y4mHeader header;
  std::vector<Frame> frames;
};

/// Reads a whole stream.
Y4mVideo parse_y4m(std::istream& in);

/// Writes frames as C420jpeg with neutral (128) chroma.
void write_y4m(std::ostream& out, std::span<const Frame> frames, int fps_num, int fps_den = 1);

/// A run of consecutive frames analysed as one unit.
struct Segment {
  std::vector<Frame> frames;
  double fps = 0.0;
  std::string segment_id;
};

/// Number of frames in a full segment: ceil(fps * seg_seconds).
std::size_t frames_per_segment(double fps, double seg_seconds);

/// Splits frames into consecutive, non-overlapping segments of
/// frames_per_segment() frames. The trailing partial segment is kept.
/// Segment ids are "<prefix>_s000", "<prefix>_s001", ...
std::vector<Segment> segment_stream(std::vector<Frame> frames, double fps, double seg_seconds,
                                    const std::string& id_prefix = "seg");

}  // namespace mcbe
