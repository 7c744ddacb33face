// SPDX-FileCopyrightText: 2026 Contributors to the mcbe project.
// SPDX-License-Identifier: Apache-2.0

#include "mcbe/model_bank.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/core.h>
#include <json.hpp>

#include "mcbe/csv.hpp"
#include "mcbe/error.hpp"
#include "mcbe/io.hpp"

namespace mcbe {

using nlohmann::json;

namespace {

constexpr std::string_view kFormatTag = "mcbe-model-bank";
constexpr std::string_view kTrainingHeader =
    "segment_id,codec,width,height,bitrate_bps,E_Y,h,L_Y,vmaf";

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return fmt::format("{:016x}", h);
}

json tree_to_json(const DecisionTree& tree) {
  json feature = json::array(), threshold = json::array(), left = json::array(),
       right = json::array(), value = json::array();
  for (const auto& n : tree.nodes()) {
    feature.push_back(n.feature);
    threshold.push_back(n.threshold);
    left.push_back(n.left);
    right.push_back(n.right);
    value.push_back(n.value);
  }
  return {{"feature", feature}, {"threshold", threshold}, {"left", left},
          {"right", right},     {"value", value}};
}

DecisionTree tree_from_json(const json& obj) {
  const auto& feature = obj.at("feature");
  const auto& threshold = obj.at("threshold");
  const auto& left = obj.at("left");
  const auto& right = obj.at("right");
  const auto& value = obj.at("value");
  const std::size_t n = feature.size();
  if (threshold.size() != n || left.size() != n || right.size() != n || value.size() != n) {
    throw DataError("tree node arrays differ in length");
  }
  std::vector<DecisionTree::Node> nodes(n);
  for (std::size_t i = 0; i < n; ++i) {
    nodes[i] = {feature[i].get<int>(), threshold[i].get<double>(), left[i].get<int>(),
                right[i].get<int>(), value[i].get<double>()};
  }
  return DecisionTree(std::move(nodes));
}

json params_to_json(const ForestParams& p) {
  return {{"n_estimators", p.n_estimators},
          {"max_depth", p.max_depth},
          {"min_samples_split", p.min_samples_split},
          {"min_samples_leaf", p.min_samples_leaf}};
}

ForestParams params_from_json(const json& obj) {
  return {obj.at("n_estimators").get<int>(), obj.at("max_depth").get<int>(),
          obj.at("min_samples_split").get<int>(), obj.at("min_samples_leaf").get<int>()};
}

}  // namespace

ModelBank::ModelBank() : ModelBank(default_resolution_set()) {}

ModelBank::ModelBank(std::vector<std::string> resolution_set)
    : resolution_set_(std::move(resolution_set)) {
  if (resolution_set_.empty()) throw DataError("model bank needs a non-empty resolution set");
}

void ModelBank::add(ForestModel model) {
  if (!model.trained()) throw DataError("cannot add an untrained model to the bank");
  if (std::find(resolution_set_.begin(), resolution_set_.end(), model.resolution()) ==
      resolution_set_.end()) {
    throw DataError(fmt::format("resolution '{}' is not in the configured resolution set",
                                model.resolution()));
  }
  Key key{model.codec(), model.resolution()};
  if (models_.contains(key)) {
    throw DataError(fmt::format("duplicate model for ({}, {})", key.first, key.second));
  }
  models_.emplace(std::move(key), std::move(model));
}

const ForestModel* ModelBank::find(std::string_view codec, std::string_view resolution) const {
  const auto it = models_.find(Key{std::string(codec), std::string(resolution)});
  return it == models_.end() ? nullptr : &it->second;
}

MultiCodecLadder predict_ladder(const ModelBank& bank, const MultiCodecLadder& ladder,
                                const SegmentFeatures& features) {
  MultiCodecLadder out = ladder;
  for (auto& c : out.codecs) {
    for (auto& r : c.rungs) {
      const auto key = r.resolution.key();
      const ForestModel* model = bank.find(r.codec, key);
      if (model == nullptr) {
        throw DataError(fmt::format("no model for ({}, {})", r.codec, key));
      }
      r.vmaf = model->predict(make_feature_vector(features, r.bitrate));
    }
  }
  return out;
}

std::string bank_to_text(const ModelBank& bank) {
  json models = json::array();
  for (const auto& [key, model] : bank.models()) {
    json trees = json::array();
    for (const auto& t : model.trees()) trees.push_back(tree_to_json(t));
    models.push_back({{"codec", key.first},
                      {"resolution", key.second},
                      {"training_seed", model.training_seed()},
                      {"hyperparameters", params_to_json(model.params())},
                      {"feature_names", feature_names()},
                      {"trees", std::move(trees)}});
  }
  const std::string checksum = fnv1a_hex(models.dump());
  json doc = {{"format", kFormatTag},
              {"version", kModelBankVersion},
              {"resolution_set", bank.resolution_set()},
              {"models", std::move(models)},
              {"checksum", checksum}};
  return doc.dump() + "\n";
}

ModelBank bank_from_text(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw DataError(fmt::format("model bank: parse error (truncated or corrupt file?): {}",
                                e.what()));
  }
  try {
    if (!doc.is_object() || doc.value("format", "") != kFormatTag) {
      throw DataError("model bank: missing or wrong format tag");
    }
    const auto& version = doc.at("version");
    if (!version.is_number_integer() || version.get<int>() != kModelBankVersion) {
      throw DataError(fmt::format("model bank: unsupported version {} (expected {})",
                                  version.dump(), kModelBankVersion));
    }
    const auto& models = doc.at("models");
    if (fnv1a_hex(models.dump()) != doc.at("checksum").get<std::string>()) {
      throw DataError("model bank: checksum mismatch");
    }
    ModelBank bank(doc.at("resolution_set").get<std::vector<std::string>>());
    for (const auto& m : models) {
      if (m.at("feature_names").get<std::vector<std::string>>() != feature_names()) {
        throw DataError("model bank: unexpected feature names");
      }
      std::vector<DecisionTree> trees;
      for (const auto& t : m.at("trees")) trees.push_back(tree_from_json(t));
      bank.add(ForestModel(m.at("codec").get<std::string>(), m.at("resolution").get<std::string>(),
                           params_from_json(m.at("hyperparameters")),
                           m.at("training_seed").get<std::uint64_t>(), std::move(trees)));
    }
    return bank;
  } catch (const json::exception& e) {
    throw DataError(fmt::format("model bank: invalid structure: {}", e.what()));
  }
}

void save_bank(const ModelBank& bank, const std::filesystem::path& path) {
  write_text_file(path, bank_to_text(bank));
}

ModelBank load_bank(const std::filesystem::path& path) {
  try {
    return bank_from_text(read_text_file(path));
  } catch (const DataError& e) {
    throw DataError(fmt::format("'{}': {}", path.string(), e.what()));
  }
}

std::vector<TrainingSample> training_samples_from_csv(std::string_view text) {
  std::vector<TrainingSample> out;
  for (const auto& row : csv::parse(text, kTrainingHeader)) {
    TrainingSample s;
    s.codec = row.fields[1];
    if (s.codec.empty()) throw DataError(fmt::format("line {}: empty codec", row.line));
    s.resolution.width = static_cast<int>(csv::to_int(row, 2, "width"));
    s.resolution.height = static_cast<int>(csv::to_int(row, 3, "height"));
    if (s.resolution.width <= 0 || s.resolution.height <= 0) {
      throw DataError(fmt::format("line {}: resolution must be positive", row.line));
    }
    const long long bitrate = csv::to_int(row, 4, "bitrate_bps");
    if (bitrate <= 0) {
      throw DataError(fmt::format("line {}: bitrate_bps must be positive", row.line));
    }
    s.features = {csv::to_double(row, 5, "E_Y"), csv::to_double(row, 6, "h"),
                  csv::to_double(row, 7, "L_Y"), static_cast<double>(bitrate)};
    s.target_vmaf = csv::to_double(row, 8, "vmaf");
    if (!(s.target_vmaf >= 0.0 && s.target_vmaf <= 100.0)) {
      throw DataError(
          fmt::format("line {}: vmaf {} outside [0, 100]", row.line, row.fields[8]));
    }
    out.push_back(std::move(s));
  }
  return out;
}

ModelBank train_bank(std::span<const TrainingSample> samples, std::uint64_t seed,
                     std::vector<std::string> resolution_set,
                     std::vector<KeyTrainingSummary>* summary, const ForestParams& params) {
  std::map<ModelBank::Key, std::vector<TrainingSample>> groups;
  for (const auto& s : samples) groups[{s.codec, s.resolution.key()}].push_back(s);
  if (groups.empty()) throw DataError("no training samples");

  ModelBank bank(std::move(resolution_set));
  for (auto& [key, group] : groups) {
    if (group.size() < 2) {
      throw DataError(fmt::format("({}, {}): need at least 2 samples, got {}", key.first,
                                  key.second, group.size()));
    }
    ForestModel model = train_forest(group, seed, params);
    if (summary != nullptr) {
      double abs_err = 0.0;
      for (const auto& s : group) abs_err += std::abs(model.predict(s.features) - s.target_vmaf);
      summary->push_back({key, group.size(), abs_err / static_cast<double>(group.size())});
    }
    bank.add(std::move(model));
  }
  return bank;
}

}  // namespace mcbe
