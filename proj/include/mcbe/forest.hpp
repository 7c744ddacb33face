// SPDX-FileCopyrightText: 2026 Contributors to the mcbe project.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mcbe/features.hpp"
#include "mcbe/ladder.hpp"

namespace mcbe {

/// Model inputs in fixed order: E_Y, h, L_Y, bitrate (bits/s).
inline constexpr std::size_t kFeatureCount = 4;
using FeatureVector = std::array<double, kFeatureCount>;

FeatureVector make_feature_vector(const SegmentFeatures& features, Bitrate bitrate);
const std::vector<std::string>& feature_names();

struct TrainingSample {
  FeatureVector features{};
  double target_vmaf = 0.0;
  std::string codec;
  Resolution resolution;
};

/// Random-forest hyperparameters. Defaults are the tuned values used for
/// every (codec, resolution) model.
struct ForestParams {
  int n_estimators = 100;
  int max_depth = 14;
  int min_samples_split = 2;
  int min_samples_leaf = 1;

  friend bool operator==(const ForestParams&, const ForestParams&) = default;
};

/// CART regression tree stored as a flat node array, root at index 0.
/// Samples with x[feature] <= threshold go left.
class DecisionTree {
public:
  struct Node {
    int feature = -1;  // -1 marks a leaf
    double threshold = 0.0;
    int left = -1;
    int right = -1;
    double value = 0.0;  // leaf output

    bool is_leaf() const { return feature < 0; }
  };

  DecisionTree() = default;
  /// Throws DataError unless the nodes form a well-formed tree: every child
  /// index points forward and inside the array, feature indices are valid
  /// and all numbers are finite.
  explicit DecisionTree(std::vector<Node> nodes);

  double predict(const FeatureVector& x) const;
  const std::vector<Node>& nodes() const { return nodes_; }
  /// Longest root-to-leaf path, counted in splits.
  int depth() const;

private:
  std::vector<Node> nodes_;
};

/// Bagged ensemble of regression trees for one (codec, resolution) key.
class ForestModel {
public:
  ForestModel() = default;
  /// Throws DataError if the tree count differs from params.n_estimators or
  /// the forest is empty.
  ForestModel(std::string codec, std::string resolution, ForestParams params,
              std::uint64_t training_seed, std::vector<DecisionTree> trees);

  /// Mean tree output clamped to [0, 100]. Throws DataError when untrained.
  double predict(const FeatureVector& x) const;

  const std::string& codec() const { return codec_; }
  const std::string& resolution() const { return resolution_; }
  const ForestParams& params() const { return params_; }
  std::uint64_t training_seed() const { return training_seed_; }
  const std::vector<DecisionTree>& trees() const { return trees_; }
  bool trained() const { return !trees_.empty(); }

private:
  std::string codec_;
  std::string resolution_;
  ForestParams params_;
  std::uint64_t training_seed_ = 0;
  std::vector<DecisionTree> trees_;
};

/// Fits params.n_estimators CART trees, each on a bootstrap resample drawn
/// from a generator seeded by (seed, tree index). Splits minimise the summed
/// squared error over all four features; ties go to the lowest feature index
/// and then the lowest threshold. Thresholds are midpoints between adjacent
/// distinct values.
///
/// Throws DataError for fewer than two samples, mixed (codec, resolution)
/// keys, targets outside [0, 100] or non-finite features.
ForestModel train_forest(std::span<const TrainingSample> samples, std::uint64_t seed,
                         const ForestParams& params = {});
ForestModel train_forest(std::span<const TrainingSample> samples, std::uint64_t seed,
                         const ForestParams& params, std::size_t threads);

/// Bootstrap indices used for tree `tree_index`. Exposed for tests.
std::vector<std::uint32_t> bootstrap_indices(std::uint64_t seed, std::uint64_t tree_index,
                                             std::size_t n);

}  // namespace mcbe
