// SPDX-FileCopyrightText: 2026 Contributors to the mcbe project.
// SPDX-License-Identifier: Apache-2.0

#include "naive_mcbe.hpp"

namespace oracle {

std::vector<Point> jnd_scan(const std::vector<Point>& points, double jnd, double vmax) {
  std::vector<Point> kept;
  for (std::size_t t = 0; t < points.size(); ++t) {
    if (t == 0) {
      kept.push_back(points[t]);
      continue;
    }
    const bool lossless = points[t].vmaf > vmax;
    const bool redundant = points[t].vmaf - kept[kept.size() - 1].vmaf < jnd;
    if (!lossless && !redundant) kept.push_back(points[t]);
  }
  return kept;
}

double baseline_value(const std::vector<Point>& baseline, long long b, bool& below) {
  below = false;
  // Lower bracket: largest baseline bitrate <= b. Upper: smallest >= b.
  int lo = -1;
  int hi = -1;
  for (int i = 0; i < static_cast<int>(baseline.size()); ++i) {
    if (baseline[i].bitrate <= b && (lo < 0 || baseline[i].bitrate > baseline[lo].bitrate)) lo = i;
    if (baseline[i].bitrate >= b && (hi < 0 || baseline[i].bitrate < baseline[hi].bitrate)) hi = i;
  }
  if (lo < 0) {
    below = true;
    return 0.0;
  }
  if (hi < 0) return baseline[lo].vmaf;
  if (baseline[lo].bitrate == baseline[hi].bitrate) return baseline[lo].vmaf;
  const double vi = baseline[lo].vmaf;
  const double vj = baseline[hi].vmaf;
  const double bi = static_cast<double>(baseline[lo].bitrate);
  const double bj = static_cast<double>(baseline[hi].bitrate);
  return (vj - vi) / (bj - bi) * (static_cast<double>(b) - bi) + vi;
}

Selection select(const Ladder& ladder, double jnd, double vmax) {
  Selection q;
  if (ladder.empty()) return q;
  const std::vector<Point> base = jnd_scan(ladder[0], jnd, vmax);
  for (const auto& p : base) q.insert({0, p.bitrate});
  for (std::size_t c = 1; c < ladder.size(); ++c) {
    for (const auto& p : jnd_scan(ladder[c], jnd, vmax)) {
      bool below = false;
      const double v = baseline_value(base, p.bitrate, below);
      if (below || p.vmaf > v) q.insert({static_cast<int>(c), p.bitrate});
    }
  }
  return q;
}

}  // namespace oracle
