// SPDX-FileCopyrightText: 2026 Contributors to the mcbe project.
// SPDX-License-Identifier: Apache-2.0

// Shared fixtures for the unit and acceptance suites.

#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "mcbe/forest.hpp"
#include "mcbe/ladder.hpp"
#include "mcbe/model_bank.hpp"
#include "mcbe/y4m.hpp"
#include "oracle/naive_mcbe.hpp"

namespace testing {

inline const std::vector<mcbe::Resolution>& standard_resolutions() {
  static const std::vector<mcbe::Resolution> set = {
      {640, 360, {}},   {768, 432, {}},   {960, 540, {}},   {1280, 720, {}},
      {1920, 1080, {}}, {2560, 1440, {}}, {3840, 2160, {}}};
  return set;
}

inline mcbe::Rung rung(const std::string& codec, mcbe::Bitrate bitrate,
                       std::optional<double> vmaf = std::nullopt,
                       mcbe::Resolution res = {1920, 1080, {}}) {
  return mcbe::Rung{codec, std::move(res), bitrate, vmaf};
}

/// Forest with a single tree that returns `value` everywhere.
inline mcbe::ForestModel constant_forest(const std::string& codec, const std::string& res,
                                         double value) {
  mcbe::DecisionTree::Node leaf;
  leaf.value = value;
  mcbe::ForestParams params;
  params.n_estimators = 1;
  return mcbe::ForestModel(codec, res, params, 0, {mcbe::DecisionTree({leaf})});
}

namespace detail {
inline int build_lookup(const std::vector<std::pair<double, double>>& pts, std::size_t lo,
                        std::size_t hi, std::vector<mcbe::DecisionTree::Node>& nodes) {
  const int self = static_cast<int>(nodes.size());
  nodes.push_back({});
  if (hi - lo == 1) {
    nodes[static_cast<std::size_t>(self)].value = pts[lo].second;
    return self;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  const double threshold = (pts[mid - 1].first + pts[mid].first) / 2.0;
  const int l = build_lookup(pts, lo, mid, nodes);
  const int r = build_lookup(pts, mid, hi, nodes);
  auto& n = nodes[static_cast<std::size_t>(self)];
  n.feature = 3;
  n.threshold = threshold;
  n.left = l;
  n.right = r;
  return self;
}
}  // namespace detail

/// Single-tree forest mapping each listed bitrate to its VMAF exactly.
inline mcbe::ForestModel lookup_forest(const std::string& codec, const std::string& res,
                                       std::vector<std::pair<double, double>> points) {
  std::sort(points.begin(), points.end());
  std::vector<mcbe::DecisionTree::Node> nodes;
  detail::build_lookup(points, 0, points.size(), nodes);
  mcbe::ForestParams params;
  params.n_estimators = 1;
  return mcbe::ForestModel(codec, res, params, 0, {mcbe::DecisionTree(std::move(nodes))});
}

/// Bank whose predictions reproduce the VMAF annotations of `ladder`.
inline mcbe::ModelBank bank_reproducing(const mcbe::MultiCodecLadder& ladder) {
  std::map<std::pair<std::string, std::string>, std::vector<std::pair<double, double>>> groups;
  for (const auto& c : ladder.codecs) {
    for (const auto& r : c.rungs) {
      groups[{r.codec, r.resolution.key()}].push_back({static_cast<double>(r.bitrate), *r.vmaf});
    }
  }
  mcbe::ModelBank bank;
  for (auto& [key, pts] : groups) bank.add(lookup_forest(key.first, key.second, pts));
  return bank;
}

/// Copy of `ladder` with VMAF annotations removed.
inline mcbe::MultiCodecLadder strip_vmaf(mcbe::MultiCodecLadder ladder) {
  for (auto& c : ladder.codecs) {
    for (auto& r : c.rungs) r.vmaf.reset();
  }
  return ladder;
}

inline oracle::Ladder to_oracle(const mcbe::MultiCodecLadder& ladder) {
  oracle::Ladder out;
  for (const auto& c : ladder.codecs) {
    std::vector<oracle::Point> pts;
    for (const auto& r : c.rungs) pts.push_back({r.bitrate, *r.vmaf});
    out.push_back(pts);
  }
  return out;
}

inline oracle::Selection to_selection(const mcbe::OptimizedLadder& opt) {
  oracle::Selection s;
  for (const auto& r : opt.retained) {
    for (std::size_t i = 0; i < opt.codecs.size(); ++i) {
      if (opt.codecs[i].id == r.codec) s.insert({static_cast<int>(i), r.bitrate});
    }
  }
  return s;
}

/// Random validated ladder with 2-3 codecs of 3-8 rungs and noisy, roughly
/// increasing VMAF values. Bitrates come from a shared 100 kbps grid and VMAF
/// is rounded to half points, so ties with the baseline curve do occur.
inline mcbe::MultiCodecLadder random_ladder(std::mt19937_64& rng) {
  static const char* ids[] = {"avc", "hevc", "av1"};
  std::uniform_int_distribution<int> codec_count(2, 3);
  std::uniform_int_distribution<int> rung_count(3, 8);
  std::uniform_real_distribution<double> knee(0.4e6, 4e6);
  std::normal_distribution<double> noise(0.0, 3.0);

  mcbe::MultiCodecLadder ladder;
  const int m = codec_count(rng);
  for (int c = 0; c < m; ++c) {
    mcbe::CodecLadder cl{{ids[c], c}, {}};
    const int n = rung_count(rng);
    std::vector<int> grid(60);
    for (int i = 0; i < 60; ++i) grid[static_cast<std::size_t>(i)] = i + 1;
    std::shuffle(grid.begin(), grid.end(), rng);
    grid.resize(static_cast<std::size_t>(n));
    std::sort(grid.begin(), grid.end());
    const double k = knee(rng);
    for (int t = 0; t < n; ++t) {
      const auto b = static_cast<mcbe::Bitrate>(grid[static_cast<std::size_t>(t)]) * 100000;
      double v = 100.0 * (1.0 - std::exp(-static_cast<double>(b) / k)) + noise(rng);
      v = std::clamp(std::round(v * 2.0) / 2.0, 0.0, 100.0);
      const auto& res = standard_resolutions()[static_cast<std::size_t>(t * 7 / n)];
      cl.rungs.push_back(mcbe::Rung{ids[c], res, b, v});
    }
    ladder.codecs.push_back(std::move(cl));
  }
  return mcbe::validate_ladder(std::move(ladder));
}

/// Samples from a smooth synthetic rate-quality surface
///   v = 100 (1 - exp(-b / (k (1 + E_Y)))) + N(0, noise_sigma)
/// clamped to [0, 100], with k = 20 kbps.
inline std::vector<mcbe::TrainingSample> synthetic_rd_samples(std::size_t n, double noise_sigma,
                                                              std::mt19937_64& rng) {
  std::uniform_real_distribution<double> energy(5.0, 150.0);
  std::uniform_real_distribution<double> gradient(0.0, 50.0);
  std::uniform_real_distribution<double> luma(60.0, 180.0);
  std::uniform_real_distribution<double> log_rate(std::log(1e5), std::log(2e7));
  std::normal_distribution<double> noise(0.0, noise_sigma);
  constexpr double k = 20000.0;
  std::vector<mcbe::TrainingSample> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    mcbe::TrainingSample s;
    const double e = energy(rng);
    const double b = std::round(std::exp(log_rate(rng)));
    s.features = {e, gradient(rng), luma(rng), b};
    const double clean = 100.0 * (1.0 - std::exp(-b / (k * (1.0 + e))));
    s.target_vmaf = std::clamp(clean + (noise_sigma > 0.0 ? noise(rng) : 0.0), 0.0, 100.0);
    s.codec = "avc";
    s.resolution = {1920, 1080, {}};
    out.push_back(s);
  }
  return out;
}

inline mcbe::Frame gray_frame(int width, int height, std::uint8_t value, std::int64_t index = 0) {
  return mcbe::Frame{width, height,
                     std::vector<std::uint8_t>(static_cast<std::size_t>(width * height), value),
                     index};
}

inline mcbe::Frame random_frame(int width, int height, std::mt19937_64& rng,
                                std::int64_t index = 0) {
  std::uniform_int_distribution<int> px(0, 255);
  mcbe::Frame f{width, height, std::vector<std::uint8_t>(static_cast<std::size_t>(width * height)),
                index};
  for (auto& s : f.luma) s = static_cast<std::uint8_t>(px(rng));
  return f;
}

}  // namespace testing
