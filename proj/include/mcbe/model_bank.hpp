// SPDX-FileCopyrightText: 2026 Contributors to the mcbe project.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mcbe/features.hpp"
#include "mcbe/forest.hpp"
#include "mcbe/ladder.hpp"

namespace mcbe {

/// Version written to and required from model bank files.
inline constexpr int kModelBankVersion = 1;

/// Forests keyed by (codec id, resolution label).
class ModelBank {
public:
  using Key = std::pair<std::string, std::string>;

  /// Bank accepting the default resolution set.
  ModelBank();
  explicit ModelBank(std::vector<std::string> resolution_set);

  /// Throws DataError on a duplicate key or a resolution outside the set.
  void add(ForestModel model);

  const ForestModel* find(std::string_view codec, std::string_view resolution) const;
  const std::map<Key, ForestModel>& models() const { return models_; }
  const std::vector<std::string>& resolution_set() const { return resolution_set_; }

private:
  std::vector<std::string> resolution_set_;
  std::map<Key, ForestModel> models_;
};

/// Copy of `ladder` with every rung's VMAF predicted by the matching model.
/// Throws DataError naming the first (codec, resolution) without a model.
MultiCodecLadder predict_ladder(const ModelBank& bank, const MultiCodecLadder& ladder,
                                const SegmentFeatures& features);

// Bank files are JSON:
//   {"format": "mcbe-model-bank", "version": 1,
//    "resolution_set": [...],
//    "models": [{"codec", "resolution", "training_seed", "hyperparameters",
//                "feature_names", "trees": [{"feature": [...], "threshold": [...],
//                                            "left": [...], "right": [...],
//                                            "value": [...]}]}],
//    "checksum": "<FNV-1a 64 of the compact dump of models, hex>"}
// Serialization is deterministic: equal banks give identical bytes.

std::string bank_to_text(const ModelBank& bank);
/// Throws DataError on malformed JSON, wrong format or version, checksum
/// mismatch or structurally invalid trees.
ModelBank bank_from_text(std::string_view text);

void save_bank(const ModelBank& bank, const std::filesystem::path& path);
ModelBank load_bank(const std::filesystem::path& path);

/// Parses a training CSV with header
/// "segment_id,codec,width,height,bitrate_bps,E_Y,h,L_Y,vmaf".
/// Rows with VMAF outside [0, 100] or non-positive bitrate are rejected with
/// their line number.
std::vector<TrainingSample> training_samples_from_csv(std::string_view text);

struct KeyTrainingSummary {
  ModelBank::Key key;
  std::size_t samples = 0;
  double training_mae = 0.0;
};

/// Trains one forest per (codec, resolution) present in `samples`. Keys are
/// processed in sorted order and each uses `seed`.
ModelBank train_bank(std::span<const TrainingSample> samples, std::uint64_t seed,
                     std::vector<std::string> resolution_set,
                     std::vector<KeyTrainingSummary>* summary = nullptr,
                     const ForestParams& params = {});

}  // namespace mcbe
