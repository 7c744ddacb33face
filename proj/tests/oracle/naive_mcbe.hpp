// SPDX-FileCopyrightText: 2026 Contributors to the mcbe project.
// SPDX-License-Identifier: Apache-2.0

// Straightforward re-implementation of the two elimination steps on plain
// vectors, kept separate from the library code it checks.

#pragma once

#include <set>
#include <utility>
#include <vector>

namespace oracle {

struct Point {
  long long bitrate;
  double vmaf;
};

/// codecs[0] is the baseline; each codec's points ascend by bitrate.
using Ladder = std::vector<std::vector<Point>>;

/// Identities (codec index, bitrate) of the retained representations.
using Selection = std::set<std::pair<int, long long>>;

/// Points of one codec kept by the JND / v_max scan.
std::vector<Point> jnd_scan(const std::vector<Point>& points, double jnd, double vmax);

/// Baseline-curve value at bitrate b; `below` is set when b precedes the
/// first baseline point.
double baseline_value(const std::vector<Point>& baseline, long long b, bool& below);

Selection select(const Ladder& ladder, double jnd, double vmax);

}  // namespace oracle
