// SPDX-FileCopyrightText: 2026 Contributors to the mcbe project.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mcbe/y4m.hpp"

namespace mcbe {

/// Edge length of the square analysis block.
inline constexpr int kBlockSize = 32;
inline constexpr int kBlockArea = kBlockSize * kBlockSize;

/// Row-major 32x32 block of samples or coefficients. Element (i, j) is at
/// i * kBlockSize + j; i is the vertical index.
using Block = std::array<double, kBlockArea>;

/// Orthonormal 2-D DCT-II. Coefficient (0, 0) equals kBlockSize times the
/// block mean. Computed with a separable even/odd butterfly.
Block dct2d(const Block& block);

/// Weighted AC energy of a coefficient block:
///   sum over (i, j) != (0, 0) of exp(|i*j / w^2 - 1|) * |c(i, j)|
double block_texture_energy(const Block& coeffs);

/// Luma plane with real-valued samples, used for unquantized analysis.
struct LumaPlane {
  int width = 0;
  int height = 0;
  std::vector<double> samples;

  static LumaPlane from_frame(const Frame& frame);
};

/// Copies block (bx, by) out of a plane. Blocks overhanging the right or
/// bottom edge replicate the last column/row.
Block extract_block(const LumaPlane& plane, int bx, int by);

/// Blocks per row and per column for a plane of the given size.
int blocks_across(int width);
int blocks_down(int height);

/// Texture energy of every block of a plane in raster order.
std::vector<double> frame_block_energies(const LumaPlane& plane);

/// Segment-level complexity descriptors.
struct SegmentFeatures {
  std::string segment_id;
  double texture_energy = 0.0;    // E_Y, per-pixel mean block energy
  double temporal_gradient = 0.0; // h, per-pixel mean |dE| between frames
  double luminance = 0.0;         // L_Y, mean luma sample
};

/// Features of a run of equally sized planes. Throws DataError on an empty
/// run or mismatched plane sizes. Frames are analysed on up to `threads`
/// workers; the result does not depend on the worker count.
SegmentFeatures plane_features(std::span<const LumaPlane> planes, std::string segment_id,
                               std::size_t threads);
SegmentFeatures plane_features(std::span<const LumaPlane> planes, std::string segment_id);

SegmentFeatures segment_features(const Segment& segment);
SegmentFeatures segment_features(const Segment& segment, std::size_t threads);

/// Features CSV: header "segment_id,E_Y,h,L_Y", six decimals per value.
std::string features_to_csv(std::span<const SegmentFeatures> rows);
std::vector<SegmentFeatures> features_from_csv(std::string_view text);

}  // namespace mcbe
