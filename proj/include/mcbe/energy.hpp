// SPDX-FileCopyrightText: 2026 Contributors to the mcbe project.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "mcbe/ladder.hpp"

namespace mcbe {

/// Coefficients of the energy model. Encoding and transmission
/// coefficients are modelling inputs, not measurements.
struct EnergyParams {
  double storage_watts_per_bit = 0.0;  // P_b
  double storage_hours = 0.0;          // T_s
  std::map<std::string, double> encode_joules_per_pixel;
  double transmit_joules_per_bit = 0.0;
  double deliveries = 1.0;  // expected downloads per stored rung
  double seg_seconds = 4.0;
  double fps = 30.0;

  /// Throws DataError on negative or non-finite values, or non-positive
  /// seg_seconds / fps.
  void validate() const;
};

// {"storage_watts_per_bit": 1e-9, "storage_hours": 24,
//  "encode_joules_per_pixel": {"avc": 1e-8, ...},
//  "transmit_joules_per_bit": 1e-7, "deliveries": 1000,
//  "seg_seconds": 4, "fps": 30}
EnergyParams energy_params_from_json(const nlohmann::json& doc);
nlohmann::json energy_params_to_json(const EnergyParams& params);

/// Storage energy in watt-hours: bits * watts/bit * hours.
double storage_energy(double bits, double watts_per_bit, double hours);

/// Stored bits for one segment of every rung: sum of bitrate * seg_seconds.
double ladder_size(std::span<const Rung> rungs, double seg_seconds);

/// Modelled encoding energy in joules: for each rung,
/// joules_per_pixel[codec] * width * height * fps * seg_seconds.
/// Throws DataError when a codec has no coefficient.
double encoding_energy(std::span<const Rung> rungs, const EnergyParams& params, double fps);

struct ScenarioEnergy {
  double encode_joules = 0.0;
  double size_bits = 0.0;
  double storage_wh = 0.0;
  double transmit_joules = 0.0;
};

ScenarioEnergy scenario_energy(std::span<const Rung> rungs, const EnergyParams& params);

/// Signed percentage changes (optimized - baseline) / baseline * 100. A
/// quantity whose baseline is zero has no delta.
struct EnergyDeltas {
  std::optional<double> encode;
  std::optional<double> size;
  std::optional<double> storage;
  std::optional<double> transmit;
};

struct EnergyReport {
  ScenarioEnergy baseline;
  ScenarioEnergy optimized;
  EnergyDeltas deltas;
};

std::optional<double> percent_change(double baseline, double optimized);

/// Compares two rung sets. Throws DataError when the baseline stores no bits.
EnergyReport energy_report(std::span<const Rung> baseline, std::span<const Rung> optimized,
                           const EnergyParams& params);

std::vector<Rung> all_rungs(const MultiCodecLadder& ladder);

/// "scenario,E_enc_J,S_bits,E_sto_Wh,E_tra_J" with baseline, optimized and a
/// deltas row (percent, two decimals, "NA" when undefined).
std::string report_to_csv(const EnergyReport& report);
nlohmann::json report_to_json(const EnergyReport& report);

}  // namespace mcbe
