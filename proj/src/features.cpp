// SPDX-FileCopyrightText: 2026 Contributors to the mcbe project.
// SPDX-License-Identifier: Apache-2.0

#include "mcbe/features.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include <fmt/core.h>

#include "mcbe/error.hpp"
#include "mcbe/parallel.hpp"

namespace mcbe {

namespace {

constexpr int N = kBlockSize;

// One row of 32 values; the butterfly transforms along the row index and
// treats the 32 columns as independent lanes.
using Lane = std::array<double, N>;
using LaneBlock = std::array<Lane, N>;

constexpr int log2i(int n) { return n <= 1 ? 0 : 1 + log2i(n / 2); }

struct DctTables {
  // inv_cos[log2(n)][k] = 1 / (2 cos(pi (2k+1) / 2n)), k < n/2.
  std::array<std::vector<double>, log2i(N) + 1> inv_cos;
  std::array<double, N> scale{};
  Block weight{};

  DctTables() {
    for (int n = 2; n <= N; n *= 2) {
      auto& v = inv_cos[log2i(n)];
      for (int k = 0; k < n / 2; ++k) {
        v.push_back(0.5 / std::cos(std::numbers::pi * (2 * k + 1) / (2.0 * n)));
      }
    }
    scale[0] = std::sqrt(1.0 / N);
    for (int k = 1; k < N; ++k) scale[static_cast<std::size_t>(k)] = std::sqrt(2.0 / N);
    for (int i = 0; i < N; ++i) {
      for (int j = 0; j < N; ++j) {
        const double ij = static_cast<double>(i * j) / (N * N);
        weight[static_cast<std::size_t>(i * N + j)] = std::exp(std::abs(ij - 1.0));
      }
    }
  }
};

const DctTables& tables() {
  static const DctTables t;
  return t;
}

// Unnormalized DCT-II of length n along the lane index:
//   out[k] = sum_x in[x] cos(pi (2x+1) k / 2n)
// Lee's recursion: even outputs are the half-length transform of
// x[i] + x[n-1-i]; odd outputs are adjacent sums G[m] + G[m+1] of the
// half-length transform G of (x[i] - x[n-1-i]) / (2 cos(pi (2i+1) / 2n)).
template <int n>
void butterfly(const Lane* in, Lane* out, int stride, const DctTables& t) {
  if constexpr (n == 1) {
    out[0] = in[0];
  } else {
    constexpr int half = n / 2;
    std::array<Lane, half> sum;
    std::array<Lane, half> diff;
    const double* ic = t.inv_cos[log2i(n)].data();
    for (int k = 0; k < half; ++k) {
      const Lane& a = in[k];
      const Lane& b = in[n - 1 - k];
      const double w = ic[k];
      for (int l = 0; l < N; ++l) {
        sum[k][l] = a[l] + b[l];
        diff[k][l] = (a[l] - b[l]) * w;
      }
    }
    butterfly<half>(sum.data(), out, 2 * stride, t);
    std::array<Lane, half> odd;
    butterfly<half>(diff.data(), odd.data(), 1, t);
    for (int m = 0; m + 1 < half; ++m) {
      Lane& o = out[(2 * m + 1) * stride];
      for (int l = 0; l < N; ++l) o[l] = odd[m][l] + odd[m + 1][l];
    }
    out[(n - 1) * stride] = odd[half - 1];
  }
}

void transpose(LaneBlock& b) {
  for (int i = 0; i < N; ++i) {
    for (int j = i + 1; j < N; ++j) std::swap(b[i][j], b[j][i]);
  }
}

template <typename Sample>
void extract(const Sample* data, int width, int height, int bx, int by, Block& out) {
  const int x0 = bx * N;
  const int y0 = by * N;
  for (int i = 0; i < N; ++i) {
    const int y = std::min(y0 + i, height - 1);
    const Sample* row = data + static_cast<std::ptrdiff_t>(y) * width;
    for (int j = 0; j < N; ++j) {
      const int x = std::min(x0 + j, width - 1);
      out[static_cast<std::size_t>(i * N + j)] = static_cast<double>(row[x]);
    }
  }
}

template <typename Sample>
std::vector<double> block_energies(const Sample* data, int width, int height) {
  const int across = blocks_across(width);
  const int down = blocks_down(height);
  std::vector<double> energies;
  energies.reserve(static_cast<std::size_t>(across * down));
  Block block;
  for (int by = 0; by < down; ++by) {
    for (int bx = 0; bx < across; ++bx) {
      extract(data, width, height, bx, by, block);
      energies.push_back(block_texture_energy(dct2d(block)));
    }
  }
  return energies;
}

// Per-frame inputs reduced to what the segment statistics need.
struct FrameStats {
  std::vector<double> energies;
  double luma_sum = 0.0;
};

SegmentFeatures combine(std::vector<FrameStats> frames, std::size_t samples_per_frame,
                        std::string segment_id) {
  const auto frames_n = frames.size();
  const auto blocks = frames.front().energies.size();
  const double norm = static_cast<double>(blocks) * kBlockArea;

  double energy_sum = 0.0;
  double gradient_sum = 0.0;
  double luma_sum = 0.0;
  for (std::size_t p = 0; p < frames_n; ++p) {
    const auto& cur = frames[p].energies;
    for (std::size_t k = 0; k < blocks; ++k) energy_sum += cur[k];
    if (p > 0) {
      const auto& prev = frames[p - 1].energies;
      for (std::size_t k = 0; k < blocks; ++k) gradient_sum += std::abs(cur[k] - prev[k]);
    }
    luma_sum += frames[p].luma_sum;
  }

  SegmentFeatures f;
  f.segment_id = std::move(segment_id);
  f.texture_energy = energy_sum / (static_cast<double>(frames_n) * norm);
  f.temporal_gradient =
      frames_n > 1 ? gradient_sum / (static_cast<double>(frames_n - 1) * norm) : 0.0;
  f.luminance = luma_sum / (static_cast<double>(frames_n) * static_cast<double>(samples_per_frame));
  return f;
}

}  // namespace

Block dct2d(const Block& block) {
  const auto& t = tables();
  LaneBlock in;
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) in[i][j] = block[static_cast<std::size_t>(i * N + j)];
  }
  LaneBlock cols;
  butterfly<N>(in.data(), cols.data(), 1, t);
  transpose(cols);
  LaneBlock rows;
  butterfly<N>(cols.data(), rows.data(), 1, t);
  transpose(rows);

  Block out;
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) {
      out[static_cast<std::size_t>(i * N + j)] = rows[i][j] * t.scale[i] * t.scale[j];
    }
  }
  return out;
}

double block_texture_energy(const Block& coeffs) {
  const auto& w = tables().weight;
  double sum = 0.0;
  for (std::size_t k = 1; k < coeffs.size(); ++k) sum += w[k] * std::abs(coeffs[k]);
  return sum;
}

LumaPlane LumaPlane::from_frame(const Frame& frame) {
  return LumaPlane{frame.width, frame.height,
                   std::vector<double>(frame.luma.begin(), frame.luma.end())};
}

int blocks_across(int width) { return (width + N - 1) / N; }
int blocks_down(int height) { return (height + N - 1) / N; }

Block extract_block(const LumaPlane& plane, int bx, int by) {
  Block out;
  extract(plane.samples.data(), plane.width, plane.height, bx, by, out);
  return out;
}

std::vector<double> frame_block_energies(const LumaPlane& plane) {
  return block_energies(plane.samples.data(), plane.width, plane.height);
}

SegmentFeatures plane_features(std::span<const LumaPlane> planes, std::string segment_id,
                               std::size_t threads) {
  if (planes.empty()) throw DataError(fmt::format("segment '{}' has no frames", segment_id));
  const int width = planes.front().width;
  const int height = planes.front().height;
  for (const auto& p : planes) {
    if (p.width != width || p.height != height || width <= 0 || height <= 0 ||
        p.samples.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height)) {
      throw DataError(fmt::format("segment '{}': planes must share valid dimensions", segment_id));
    }
  }

  std::vector<FrameStats> stats(planes.size());
  parallel_for(
      planes.size(),
      [&](std::size_t i) {
        const auto& p = planes[i];
        stats[i].energies = block_energies(p.samples.data(), width, height);
        stats[i].luma_sum = std::accumulate(p.samples.begin(), p.samples.end(), 0.0);
      },
      threads);
  return combine(std::move(stats), planes.front().samples.size(), std::move(segment_id));
}

SegmentFeatures plane_features(std::span<const LumaPlane> planes, std::string segment_id) {
  return plane_features(planes, std::move(segment_id), thread_budget());
}

SegmentFeatures segment_features(const Segment& segment, std::size_t threads) {
  const auto& frames = segment.frames;
  if (frames.empty()) {
    throw DataError(fmt::format("segment '{}' has no frames", segment.segment_id));
  }
  const int width = frames.front().width;
  const int height = frames.front().height;
  for (const auto& f : frames) {
    if (f.width != width || f.height != height || width <= 0 || height <= 0 ||
        f.luma.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height)) {
      throw DataError(
          fmt::format("segment '{}': frames must share valid dimensions", segment.segment_id));
    }
  }

  std::vector<FrameStats> stats(frames.size());
  parallel_for(
      frames.size(),
      [&](std::size_t i) {
        const auto& f = frames[i];
        stats[i].energies = block_energies(f.luma.data(), width, height);
        // Integer sum is exact; converted once.
        std::uint64_t sum = 0;
        for (auto s : f.luma) sum += s;
        stats[i].luma_sum = static_cast<double>(sum);
      },
      threads);
  return combine(std::move(stats), frames.front().luma.size(), segment.segment_id);
}

SegmentFeatures segment_features(const Segment& segment) {
  return segment_features(segment, thread_budget());
}

}  // namespace mcbe
