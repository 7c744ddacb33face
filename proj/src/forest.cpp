// SPDX-FileCopyrightText: 2026 Contributors to the mcbe project.
// SPDX-License-Identifier: Apache-2.0

#include "mcbe/forest.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include <fmt/core.h>

#include "mcbe/error.hpp"
#include "mcbe/parallel.hpp"

namespace mcbe {

FeatureVector make_feature_vector(const SegmentFeatures& features, Bitrate bitrate) {
  return {features.texture_energy, features.temporal_gradient, features.luminance,
          static_cast<double>(bitrate)};
}

const std::vector<std::string>& feature_names() {
  static const std::vector<std::string> names{"E_Y", "h", "L_Y", "bitrate_bps"};
  return names;
}

// ---------------------------------------------------------------------------
// DecisionTree

DecisionTree::DecisionTree(std::vector<Node> nodes) : nodes_(std::move(nodes)) {
  if (nodes_.empty()) throw DataError("decision tree has no nodes");
  const int size = static_cast<int>(nodes_.size());
  for (int i = 0; i < size; ++i) {
    const Node& n = nodes_[static_cast<std::size_t>(i)];
    if (n.is_leaf()) {
      if (!std::isfinite(n.value)) throw DataError(fmt::format("tree node {}: bad leaf value", i));
      continue;
    }
    if (n.feature >= static_cast<int>(kFeatureCount)) {
      throw DataError(fmt::format("tree node {}: feature index {} out of range", i, n.feature));
    }
    if (!std::isfinite(n.threshold)) throw DataError(fmt::format("tree node {}: bad threshold", i));
    if (n.left <= i || n.right <= i || n.left >= size || n.right >= size) {
      throw DataError(fmt::format("tree node {}: child index out of range", i));
    }
  }
}

double DecisionTree::predict(const FeatureVector& x) const {
  std::size_t i = 0;
  while (!nodes_[i].is_leaf()) {
    const Node& n = nodes_[i];
    i = static_cast<std::size_t>(x[static_cast<std::size_t>(n.feature)] <= n.threshold ? n.left
                                                                                        : n.right);
  }
  return nodes_[i].value;
}

int DecisionTree::depth() const {
  if (nodes_.empty()) return 0;
  // Children always follow their parent, so one forward pass suffices.
  std::vector<int> d(nodes_.size(), 0);
  int deepest = 0;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    deepest = std::max(deepest, d[i]);
    if (!nodes_[i].is_leaf()) {
      d[static_cast<std::size_t>(nodes_[i].left)] = d[i] + 1;
      d[static_cast<std::size_t>(nodes_[i].right)] = d[i] + 1;
    }
  }
  return deepest;
}

// ---------------------------------------------------------------------------
// ForestModel

ForestModel::ForestModel(std::string codec, std::string resolution, ForestParams params,
                         std::uint64_t training_seed, std::vector<DecisionTree> trees)
    : codec_(std::move(codec)),
      resolution_(std::move(resolution)),
      params_(params),
      training_seed_(training_seed),
      trees_(std::move(trees)) {
  if (trees_.empty()) throw DataError("forest has no trees");
  if (static_cast<int>(trees_.size()) != params_.n_estimators) {
    throw DataError(fmt::format("forest has {} trees but n_estimators is {}", trees_.size(),
                                params_.n_estimators));
  }
}

double ForestModel::predict(const FeatureVector& x) const {
  if (trees_.empty()) throw DataError("forest model is not trained");
  double sum = 0.0;
  for (const auto& t : trees_) sum += t.predict(x);
  return std::clamp(sum / static_cast<double>(trees_.size()), 0.0, 100.0);
}

// ---------------------------------------------------------------------------
// Training

std::vector<std::uint32_t> bootstrap_indices(std::uint64_t seed, std::uint64_t tree_index,
                                             std::size_t n) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(tree_index),
                    static_cast<std::uint32_t>(tree_index >> 32)};
  std::mt19937_64 rng(seq);
  // Rejection sampling instead of uniform_int_distribution, whose output is
  // implementation-defined.
  const std::uint64_t bound = n;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::vector<std::uint32_t> out(n);
  for (auto& idx : out) {
    std::uint64_t r;
    do {
      r = rng();
    } while (r >= limit);
    idx = static_cast<std::uint32_t>(r % bound);
  }
  return out;
}

namespace {

class TreeBuilder {
public:
  TreeBuilder(std::span<const TrainingSample> samples, const ForestParams& params)
      : samples_(samples), params_(params) {}

  DecisionTree build(std::vector<std::uint32_t> indices) {
    nodes_.clear();
    grow(indices, 0);
    return DecisionTree(std::move(nodes_));
  }

private:
  struct Split {
    int feature = -1;
    double threshold = 0.0;
  };

  double target(std::uint32_t i) const { return samples_[i].target_vmaf; }
  double feature(std::uint32_t i, std::size_t f) const { return samples_[i].features[f]; }

  int grow(std::vector<std::uint32_t>& idx, int depth) {
    const int self = static_cast<int>(nodes_.size());
    nodes_.push_back({});

    double sum = 0.0;
    bool pure = true;
    const double first = target(idx.front());
    for (auto i : idx) {
      sum += target(i);
      pure = pure && target(i) == first;
    }
    const double mean = sum / static_cast<double>(idx.size());

    Split split;
    if (!pure && depth < params_.max_depth &&
        static_cast<int>(idx.size()) >= params_.min_samples_split) {
      split = best_split(idx, sum);
    }
    if (split.feature < 0) {
      nodes_[static_cast<std::size_t>(self)].value = mean;
      return self;
    }

    std::vector<std::uint32_t> left;
    std::vector<std::uint32_t> right;
    const auto f = static_cast<std::size_t>(split.feature);
    for (auto i : idx) (feature(i, f) <= split.threshold ? left : right).push_back(i);
    idx.clear();
    idx.shrink_to_fit();

    const int l = grow(left, depth + 1);
    const int r = grow(right, depth + 1);
    auto& node = nodes_[static_cast<std::size_t>(self)];
    node.feature = split.feature;
    node.threshold = split.threshold;
    node.left = l;
    node.right = r;
    node.value = mean;
    return self;
  }

  // Maximises sum_L^2/n_L + sum_R^2/n_R, which minimises the summed squared
  // error of the two children.
  Split best_split(const std::vector<std::uint32_t>& idx, double total) {
    const std::size_t n = idx.size();
    const auto min_leaf = static_cast<std::size_t>(std::max(1, params_.min_samples_leaf));
    Split best;
    double best_score = -std::numeric_limits<double>::infinity();
    order_ = idx;

    for (std::size_t f = 0; f < kFeatureCount; ++f) {
      std::sort(order_.begin(), order_.end(), [&](std::uint32_t a, std::uint32_t b) {
        const double xa = feature(a, f);
        const double xb = feature(b, f);
        return xa < xb || (xa == xb && a < b);
      });
      double left_sum = 0.0;
      for (std::size_t pos = 1; pos < n; ++pos) {
        left_sum += target(order_[pos - 1]);
        const double lo = feature(order_[pos - 1], f);
        const double hi = feature(order_[pos], f);
        if (lo == hi || pos < min_leaf || n - pos < min_leaf) continue;
        const double nl = static_cast<double>(pos);
        const double nr = static_cast<double>(n - pos);
        const double right_sum = total - left_sum;
        const double score = left_sum * left_sum / nl + right_sum * right_sum / nr;
        if (score > best_score) {
          best_score = score;
          best.feature = static_cast<int>(f);
          double mid = lo + (hi - lo) / 2.0;
          if (!(mid < hi)) mid = lo;
          best.threshold = mid;
        }
      }
    }
    return best;
  }

  std::span<const TrainingSample> samples_;
  ForestParams params_;
  std::vector<DecisionTree::Node> nodes_;
  std::vector<std::uint32_t> order_;
};

void check_training_set(std::span<const TrainingSample> samples, const ForestParams& params) {
  if (samples.size() < 2) {
    throw DataError(fmt::format("training needs at least 2 samples, got {}", samples.size()));
  }
  if (params.n_estimators < 1 || params.max_depth < 0 || params.min_samples_split < 2 ||
      params.min_samples_leaf < 1) {
    throw DataError("invalid forest hyperparameters");
  }
  const auto& head = samples.front();
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto& s = samples[i];
    if (s.codec != head.codec || s.resolution.key() != head.resolution.key()) {
      throw DataError(fmt::format("sample {} has key ({}, {}) but the set is ({}, {})", i,
                                  s.codec, s.resolution.key(), head.codec,
                                  head.resolution.key()));
    }
    if (!(s.target_vmaf >= 0.0 && s.target_vmaf <= 100.0)) {
      throw DataError(fmt::format("sample {}: target VMAF {} outside [0, 100]", i, s.target_vmaf));
    }
    for (double x : s.features) {
      if (!std::isfinite(x)) throw DataError(fmt::format("sample {}: non-finite feature", i));
    }
    if (!(s.features[3] > 0.0)) {
      throw DataError(fmt::format("sample {}: bitrate must be positive", i));
    }
  }
}

}  // namespace

ForestModel train_forest(std::span<const TrainingSample> samples, std::uint64_t seed,
                         const ForestParams& params, std::size_t threads) {
  check_training_set(samples, params);
  std::vector<DecisionTree> trees(static_cast<std::size_t>(params.n_estimators));
  parallel_for(
      trees.size(),
      [&](std::size_t t) {
        TreeBuilder builder(samples, params);
        trees[t] = builder.build(bootstrap_indices(seed, t, samples.size()));
      },
      threads);
  return ForestModel(samples.front().codec, samples.front().resolution.key(), params, seed,
                     std::move(trees));
}

ForestModel train_forest(std::span<const TrainingSample> samples, std::uint64_t seed,
                         const ForestParams& params) {
  return train_forest(samples, seed, params, thread_budget());
}

}  // namespace mcbe
