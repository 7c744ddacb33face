// SPDX-FileCopyrightText: 2026 Contributors to the mcbe project.
// SPDX-License-Identifier: Apache-2.0

#include "mcbe/eliminate.hpp"

#include <algorithm>

#include <fmt/core.h>

#include "mcbe/error.hpp"

namespace mcbe {

void EliminationConfig::validate() const {
  if (!(jnd > 0.0)) throw DataError(fmt::format("JND threshold must be > 0, got {}", jnd));
  if (!(vmax > 0.0 && vmax <= 100.0)) {
    throw DataError(fmt::format("v_max must lie in (0, 100], got {}", vmax));
  }
  if (!(jnd < vmax)) {
    throw DataError(fmt::format("JND threshold {} must be below v_max {}", jnd, vmax));
  }
}

EliminationConfig EliminationConfig::for_jnd(int jnd_points) {
  switch (jnd_points) {
    case 2:
      return {2.0, 98.0};
    case 4:
      return {4.0, 96.0};
    case 6:
      return {6.0, 94.0};
    default:
      throw DataError(fmt::format("no standard operating point for JND {}", jnd_points));
  }
}

JndPruneResult jnd_prune(std::span<const Rung> rungs, const EliminationConfig& cfg) {
  JndPruneResult out;
  if (rungs.empty()) return out;
  for (std::size_t t = 0; t < rungs.size(); ++t) {
    if (!rungs[t].vmaf) {
      throw DataError(fmt::format("rung {} of codec '{}' has no predicted VMAF", t,
                                  rungs[t].codec));
    }
    if (t > 0 && rungs[t].bitrate <= rungs[t - 1].bitrate) {
      throw DataError(fmt::format("codec '{}': rungs must ascend strictly by bitrate",
                                  rungs[t].codec));
    }
  }

  out.retained.push_back(rungs.front());
  for (std::size_t t = 1; t < rungs.size(); ++t) {
    const double v = *rungs[t].vmaf;
    const double anchor = cfg.anchor == JndAnchor::kLastRetained ? *out.retained.back().vmaf
                                                                 : *rungs[t - 1].vmaf;
    if (v > cfg.vmax) {
      out.eliminated.push_back({rungs[t], EliminationReason::kAboveVmax});
    } else if (v - anchor < cfg.jnd) {
      out.eliminated.push_back({rungs[t], EliminationReason::kBelowJnd});
    } else {
      out.retained.push_back(rungs[t]);
    }
  }
  return out;
}

std::optional<double> interpolate_rd(std::span<const RdPoint> curve, Bitrate b) {
  if (curve.empty()) throw DataError("cannot interpolate an empty RD curve");
  if (b < curve.front().bitrate) return std::nullopt;
  // Upper bracket: first point with bitrate >= b.
  const auto upper = std::lower_bound(curve.begin(), curve.end(), b,
                                      [](const RdPoint& p, Bitrate x) { return p.bitrate < x; });
  if (upper == curve.end()) return curve.back().vmaf;
  if (upper->bitrate == b) return upper->vmaf;
  const RdPoint& lo = *(upper - 1);
  const RdPoint& hi = *upper;
  const double slope = (hi.vmaf - lo.vmaf) / static_cast<double>(hi.bitrate - lo.bitrate);
  return slope * static_cast<double>(b - lo.bitrate) + lo.vmaf;
}

std::vector<RdPoint> rd_curve(std::span<const Rung> rungs) {
  std::vector<RdPoint> curve;
  curve.reserve(rungs.size());
  for (const auto& r : rungs) {
    if (!r.vmaf) throw DataError(fmt::format("codec '{}': rung without VMAF", r.codec));
    curve.push_back({r.bitrate, *r.vmaf});
  }
  return curve;
}

OptimizedLadder cross_codec_prune(const MultiCodecLadder& pruned,
                                  std::vector<EliminatedRung> earlier) {
  if (pruned.codecs.empty() || pruned.codecs.front().rungs.empty()) {
    throw DataError("baseline codec is missing or has no rungs");
  }
  OptimizedLadder out;
  out.eliminated = std::move(earlier);
  for (const auto& c : pruned.codecs) out.codecs.push_back(c.codec);

  const auto& baseline = pruned.codecs.front();
  const auto curve = rd_curve(baseline.rungs);
  out.retained = baseline.rungs;

  for (std::size_t ci = 1; ci < pruned.codecs.size(); ++ci) {
    for (const auto& r : pruned.codecs[ci].rungs) {
      if (!r.vmaf) throw DataError(fmt::format("codec '{}': rung without VMAF", r.codec));
      const auto reference = interpolate_rd(curve, r.bitrate);
      if (!reference || *r.vmaf > *reference) {
        out.retained.push_back(r);
      } else {
        out.eliminated.push_back({r, EliminationReason::kBelowBaselineRd});
      }
    }
  }

  // Report eliminations grouped by codec priority, then by bitrate.
  std::stable_sort(out.eliminated.begin(), out.eliminated.end(),
                   [&](const EliminatedRung& a, const EliminatedRung& b) {
                     const auto rank = [&](const std::string& id) {
                       for (std::size_t i = 0; i < out.codecs.size(); ++i) {
                         if (out.codecs[i].id == id) return i;
                       }
                       return out.codecs.size();
                     };
                     const auto ra = rank(a.rung.codec);
                     const auto rb = rank(b.rung.codec);
                     return ra != rb ? ra < rb : a.rung.bitrate < b.rung.bitrate;
                   });
  return out;
}

OptimizedLadder eliminate_redundant(const MultiCodecLadder& ladder, const EliminationConfig& cfg) {
  cfg.validate();
  MultiCodecLadder pruned;
  std::vector<EliminatedRung> eliminated;
  for (const auto& c : ladder.codecs) {
    auto step = jnd_prune(c.rungs, cfg);
    pruned.codecs.push_back({c.codec, std::move(step.retained)});
    for (auto& e : step.eliminated) eliminated.push_back(std::move(e));
  }
  return cross_codec_prune(pruned, std::move(eliminated));
}

OptimizedLadder estimate_ladder(const MultiCodecLadder& ladder, const SegmentFeatures& features,
                                const ModelBank& bank, const EliminationConfig& cfg) {
  cfg.validate();
  return eliminate_redundant(predict_ladder(bank, ladder, features), cfg);
}

}  // namespace mcbe
