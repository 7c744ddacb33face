// SPDX-FileCopyrightText: 2026 Contributors to the mcbe project.
// SPDX-License-Identifier: Apache-2.0

#include "mcbe/y4m.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>

#include <fmt/core.h>

#include "mcbe/error.hpp"

namespace mcbe {

namespace {

constexpr std::string_view kMagic = "YUV4MPEG2";
constexpr std::size_t kMaxHeaderLine = 4096;

int parse_int(std::string_view text, std::string_view tag) {
  int value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw DataError(fmt::format("y4m: malformed {} tag '{}'", tag, text));
  }
  return value;
}

// Reads up to '\n'. Returns false if the stream was already at EOF.
bool read_line(std::istream& in, std::string& line, std::string_view what) {
  line.clear();
  char ch;
  bool any = false;
  while (in.get(ch)) {
    any = true;
    if (ch == '\n') return true;
    line.push_back(ch);
    if (line.size() > kMaxHeaderLine) {
      throw DataError(fmt::format("y4m: {} line too long", what));
    }
  }
  if (any) throw DataError(fmt::format("y4m: {} line not terminated", what));
  return false;
}

void check_colorspace(const std::string& cs) {
  if (cs == "420" || cs == "420jpeg" || cs == "420paldv" || cs == "420mpeg2") return;
  if (cs.rfind("420p", 0) == 0 || cs.find("p1") != std::string::npos) {
    throw DataError(fmt::format("y4m: unsupported bit depth in colorspace 'C{}'", cs));
  }
  throw DataError(fmt::format("y4m: unsupported colorspace 'C{}'", cs));
}

}  // namespace

std::size_t Y4mHeader::luma_bytes() const {
  return static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
}

std::size_t Y4mHeader::chroma_bytes() const {
  const auto cw = static_cast<std::size_t>((width + 1) / 2);
  const auto ch = static_cast<std::size_t>((height + 1) / 2);
  return 2 * cw * ch;
}

Y4mReader::Y4mReader(std::istream& in) : in_(in) {
  std::string line;
  if (!read_line(in_, line, "header")) throw DataError("y4m: empty stream");
  std::istringstream tokens(line);
  std::string tok;
  tokens >> tok;
  if (tok != kMagic) throw DataError("y4m: missing YUV4MPEG2 magic");

  bool have_fps = false;
  while (tokens >> tok) {
    const std::string_view value = std::string_view(tok).substr(1);
    switch (tok[0]) {
      case 'W':
        header_.width = parse_int(value, "W");
        break;
      case 'H':
        header_.height = parse_int(value, "H");
        break;
      case 'F': {
        const auto colon = value.find(':');
        if (colon == std::string_view::npos) {
          throw DataError(fmt::format("y4m: malformed F tag '{}'", value));
        }
        header_.fps_num = parse_int(value.substr(0, colon), "F");
        header_.fps_den = parse_int(value.substr(colon + 1), "F");
        have_fps = true;
        break;
      }
      case 'I':
        header_.interlace = value.empty() ? '?' : value[0];
        break;
      case 'C':
        header_.colorspace = std::string(value);
        break;
      case 'A':
      case 'X':
        break;
      default:
        throw DataError(fmt::format("y4m: unknown header tag '{}'", tok));
    }
  }
  if (header_.width <= 0 || header_.height <= 0) {
    throw DataError("y4m: header must carry positive W and H");
  }
  if (!have_fps || header_.fps_num <= 0 || header_.fps_den <= 0) {
    throw DataError("y4m: header must carry a positive F tag");
  }
  check_colorspace(header_.colorspace);
  chroma_scratch_.resize(header_.chroma_bytes());
}

std::optional<Frame> Y4mReader::next() {
  std::string line;
  if (!read_line(in_, line, "FRAME")) return std::nullopt;
  if (line.rfind("FRAME", 0) != 0 || (line.size() > 5 && line[5] != ' ')) {
    throw DataError(fmt::format("y4m: expected FRAME marker before frame {}", next_index_));
  }

  Frame frame;
  frame.width = header_.width;
  frame.height = header_.height;
  frame.frame_index = next_index_;
  frame.luma.resize(header_.luma_bytes());
  in_.read(reinterpret_cast<char*>(frame.luma.data()),
           static_cast<std::streamsize>(frame.luma.size()));
  if (static_cast<std::size_t>(in_.gcount()) != frame.luma.size()) {
    throw DataError(fmt::format("y4m: truncated payload in frame {}", next_index_));
  }
  in_.read(chroma_scratch_.data(), static_cast<std::streamsize>(chroma_scratch_.size()));
  if (static_cast<std::size_t>(in_.gcount()) != chroma_scratch_.size()) {
    throw DataError(fmt::format("y4m: truncated payload in frame {}", next_index_));
  }
  ++next_index_;
  return frame;
}

Y4mVideo parse_y4m(std::istream& in) {
  Y4mReader reader(in);
  Y4mVideo video{reader.header(), {}};
  while (auto frame = reader.next()) video.frames.push_back(std::move(*frame));
  return video;
}

void write_y4m(std::ostream& out, std::span<const Frame> frames, int fps_num, int fps_den) {
  if (frames.empty()) throw DataError("y4m: cannot write an empty frame list");
  Y4mHeader header;
  header.width = frames.front().width;
  header.height = frames.front().height;
  out << fmt::format("YUV4MPEG2 W{} H{} F{}:{} Ip A1:1 C420jpeg\n", header.width,
                     header.height, fps_num, fps_den);
  const std::string chroma(header.chroma_bytes(), static_cast<char>(128));
  for (const auto& f : frames) {
    if (f.width != header.width || f.height != header.height ||
        f.luma.size() != header.luma_bytes()) {
      throw DataError("y4m: frames must share dimensions");
    }
    out << "FRAME\n";
    out.write(reinterpret_cast<const char*>(f.luma.data()),
              static_cast<std::streamsize>(f.luma.size()));
    out.write(chroma.data(), static_cast<std::streamsize>(chroma.size()));
  }
}

std::size_t frames_per_segment(double fps, double seg_seconds) {
  if (!(fps > 0.0) || !(seg_seconds > 0.0)) {
    throw DataError("segmenting needs positive fps and segment duration");
  }
  const double exact = fps * seg_seconds;
  const double nearest = std::round(exact);
  // Absorb representation error so 29.97 * 4 style products behave.
  const double n = std::abs(exact - nearest) < 1e-9 * nearest ? nearest : std::ceil(exact);
  return std::max<std::size_t>(1, static_cast<std::size_t>(n));
}

std::vector<Segment> segment_stream(std::vector<Frame> frames, double fps, double seg_seconds,
                                    const std::string& id_prefix) {
  const std::size_t per = frames_per_segment(fps, seg_seconds);
  std::vector<Segment> out;
  for (std::size_t start = 0; start < frames.size(); start += per) {
    const std::size_t stop = std::min(frames.size(), start + per);
    Segment seg;
    seg.fps = fps;
    seg.segment_id = fmt::format("{}_s{:03}", id_prefix, out.size());
    seg.frames.assign(std::make_move_iterator(frames.begin() + static_cast<std::ptrdiff_t>(start)),
                      std::make_move_iterator(frames.begin() + static_cast<std::ptrdiff_t>(stop)));
    out.push_back(std::move(seg));
  }
  return out;
}

}  // namespace mcbe
