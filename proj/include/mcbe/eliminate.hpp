// SPDX-FileCopyrightText: 2026 Contributors to the mcbe project.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <span>
#include <vector>

#include "mcbe/features.hpp"
#include "mcbe/ladder.hpp"
#include "mcbe/model_bank.hpp"

namespace mcbe {

/// Which earlier rung a candidate is compared against in the JND scan.
enum class JndAnchor {
  /// The most recently retained rung (default).
  kLastRetained,
  /// The immediately preceding input rung, even if it was eliminated.
  kPreviousInput,
};

struct EliminationConfig {
  double jnd = 6.0;    // minimum perceivable VMAF difference
  double vmax = 94.0;  // VMAF above which a rung counts as perceptually lossless
  JndAnchor anchor = JndAnchor::kLastRetained;

  /// Throws DataError unless 0 < jnd < vmax <= 100.
  void validate() const;

  /// The three standard operating points: (2, 98), (4, 96), (6, 94).
  static EliminationConfig for_jnd(int jnd_points);
};

struct JndPruneResult {
  std::vector<Rung> retained;
  std::vector<EliminatedRung> eliminated;
};

/// Perceptual-redundancy pruning within one codec. `rungs` must be ascending
/// by bitrate and all carry a VMAF (DataError otherwise). The first rung is
/// always kept. Each later rung is dropped as above_vmax when its VMAF exceeds
/// cfg.vmax, else as below_jnd when it improves on its anchor by less than
/// cfg.jnd; otherwise it is kept and becomes the next anchor.
JndPruneResult jnd_prune(std::span<const Rung> rungs, const EliminationConfig& cfg);

/// One point of a rate-quality curve.
struct RdPoint {
  Bitrate bitrate = 0;
  double vmaf = 0.0;
};

/// Piecewise-linear quality at bitrate `b` on a curve with strictly
/// ascending bitrates. Exact at curve points, flat beyond the last point,
/// and nullopt below the first point. Throws DataError on an empty curve.
std::optional<double> interpolate_rd(std::span<const RdPoint> curve, Bitrate b);

/// Rate-quality curve through a codec's rungs (all must carry VMAF).
std::vector<RdPoint> rd_curve(std::span<const Rung> rungs);

/// Cross-codec pruning after the JND step. `pruned` holds, per codec in
/// priority order, the rungs that survived jnd_prune. All baseline rungs are
/// kept. A rung of any other codec is kept when its bitrate lies below the
/// baseline's lowest bitrate, or when its VMAF is strictly above the baseline
/// curve at its bitrate; otherwise it is eliminated as below_baseline_rd.
/// `earlier` carries eliminations from previous steps into the result.
/// Throws DataError when the baseline codec has no rungs.
OptimizedLadder cross_codec_prune(const MultiCodecLadder& pruned,
                                  std::vector<EliminatedRung> earlier = {});

/// Both elimination steps on a ladder whose rungs all carry VMAF.
OptimizedLadder eliminate_redundant(const MultiCodecLadder& ladder, const EliminationConfig& cfg);

/// Predicts VMAF for every rung, then eliminates redundant representations.
OptimizedLadder estimate_ladder(const MultiCodecLadder& ladder, const SegmentFeatures& features,
                                const ModelBank& bank, const EliminationConfig& cfg);

}  // namespace mcbe
