// SPDX-FileCopyrightText: 2026 Contributors to the mcbe project.
// SPDX-License-Identifier: Apache-2.0

#include "mcbe/energy.hpp"

#include <cmath>

#include <fmt/core.h>

#include "mcbe/error.hpp"

namespace mcbe {

using nlohmann::json;

namespace {

void require_non_negative(double v, std::string_view name) {
  if (!std::isfinite(v) || v < 0.0) {
    throw DataError(fmt::format("energy parameter {} must be finite and >= 0, got {}", name, v));
  }
}

std::string format_value(double v) { return fmt::format("{:.10g}", v); }

std::string format_delta(const std::optional<double>& d) {
  return d ? fmt::format("{:.2f}", *d) : std::string("NA");
}

json scenario_json(const ScenarioEnergy& s) {
  return {{"E_enc_J", s.encode_joules},
          {"S_bits", s.size_bits},
          {"E_sto_Wh", s.storage_wh},
          {"E_tra_J", s.transmit_joules}};
}

json delta_json(const std::optional<double>& d) { return d ? json(*d) : json(nullptr); }

}  // namespace

void EnergyParams::validate() const {
  require_non_negative(storage_watts_per_bit, "storage_watts_per_bit");
  require_non_negative(storage_hours, "storage_hours");
  require_non_negative(transmit_joules_per_bit, "transmit_joules_per_bit");
  require_non_negative(deliveries, "deliveries");
  for (const auto& [codec, j] : encode_joules_per_pixel) {
    require_non_negative(j, fmt::format("encode_joules_per_pixel[{}]", codec));
  }
  if (!(seg_seconds > 0.0) || !std::isfinite(seg_seconds)) {
    throw DataError("energy parameter seg_seconds must be > 0");
  }
  if (!(fps > 0.0) || !std::isfinite(fps)) throw DataError("energy parameter fps must be > 0");
}

EnergyParams energy_params_from_json(const json& doc) {
  try {
    EnergyParams p;
    p.storage_watts_per_bit = doc.at("storage_watts_per_bit").get<double>();
    p.storage_hours = doc.at("storage_hours").get<double>();
    p.encode_joules_per_pixel =
        doc.at("encode_joules_per_pixel").get<std::map<std::string, double>>();
    p.transmit_joules_per_bit = doc.at("transmit_joules_per_bit").get<double>();
    p.deliveries = doc.value("deliveries", 1.0);
    p.seg_seconds = doc.value("seg_seconds", 4.0);
    p.fps = doc.value("fps", 30.0);
    p.validate();
    return p;
  } catch (const json::exception& e) {
    throw DataError(fmt::format("invalid energy parameters: {}", e.what()));
  }
}

json energy_params_to_json(const EnergyParams& p) {
  return {{"storage_watts_per_bit", p.storage_watts_per_bit},
          {"storage_hours", p.storage_hours},
          {"encode_joules_per_pixel", p.encode_joules_per_pixel},
          {"transmit_joules_per_bit", p.transmit_joules_per_bit},
          {"deliveries", p.deliveries},
          {"seg_seconds", p.seg_seconds},
          {"fps", p.fps}};
}

double storage_energy(double bits, double watts_per_bit, double hours) {
  return bits * watts_per_bit * hours;
}

double ladder_size(std::span<const Rung> rungs, double seg_seconds) {
  double bits = 0.0;
  for (const auto& r : rungs) bits += static_cast<double>(r.bitrate) * seg_seconds;
  return bits;
}

double encoding_energy(std::span<const Rung> rungs, const EnergyParams& params, double fps) {
  double joules = 0.0;
  for (const auto& r : rungs) {
    const auto it = params.encode_joules_per_pixel.find(r.codec);
    if (it == params.encode_joules_per_pixel.end()) {
      throw DataError(fmt::format("no encoding energy coefficient for codec '{}'", r.codec));
    }
    const double pixels = static_cast<double>(r.resolution.width) *
                          static_cast<double>(r.resolution.height) * fps * params.seg_seconds;
    joules += it->second * pixels;
  }
  return joules;
}

ScenarioEnergy scenario_energy(std::span<const Rung> rungs, const EnergyParams& params) {
  ScenarioEnergy s;
  s.encode_joules = encoding_energy(rungs, params, params.fps);
  s.size_bits = ladder_size(rungs, params.seg_seconds);
  s.storage_wh = storage_energy(s.size_bits, params.storage_watts_per_bit, params.storage_hours);
  s.transmit_joules = s.size_bits * params.transmit_joules_per_bit * params.deliveries;
  return s;
}

std::optional<double> percent_change(double baseline, double optimized) {
  if (!(baseline > 0.0)) return std::nullopt;
  return (optimized - baseline) / baseline * 100.0;
}

EnergyReport energy_report(std::span<const Rung> baseline, std::span<const Rung> optimized,
                           const EnergyParams& params) {
  params.validate();
  EnergyReport r;
  r.baseline = scenario_energy(baseline, params);
  r.optimized = scenario_energy(optimized, params);
  if (!(r.baseline.size_bits > 0.0)) {
    throw DataError("baseline scenario stores zero bits; deltas are undefined");
  }
  r.deltas.encode = percent_change(r.baseline.encode_joules, r.optimized.encode_joules);
  r.deltas.size = percent_change(r.baseline.size_bits, r.optimized.size_bits);
  // E_sto and E_tra are S times a constant, so their deltas equal the S delta.
  const double sto_factor = params.storage_watts_per_bit * params.storage_hours;
  const double tra_factor = params.transmit_joules_per_bit * params.deliveries;
  if (sto_factor > 0.0) r.deltas.storage = r.deltas.size;
  if (tra_factor > 0.0) r.deltas.transmit = r.deltas.size;
  return r;
}

std::vector<Rung> all_rungs(const MultiCodecLadder& ladder) {
  std::vector<Rung> out;
  for (const auto& c : ladder.codecs) out.insert(out.end(), c.rungs.begin(), c.rungs.end());
  return out;
}

std::string report_to_csv(const EnergyReport& report) {
  std::string out = "scenario,E_enc_J,S_bits,E_sto_Wh,E_tra_J\n";
  for (const auto& [name, s] : {std::pair{"baseline", report.baseline},
                                std::pair{"optimized", report.optimized}}) {
    out += fmt::format("{},{},{},{},{}\n", name, format_value(s.encode_joules),
                       format_value(s.size_bits), format_value(s.storage_wh),
                       format_value(s.transmit_joules));
  }
  const auto& d = report.deltas;
  out += fmt::format("deltas,{},{},{},{}\n", format_delta(d.encode), format_delta(d.size),
                     format_delta(d.storage), format_delta(d.transmit));
  return out;
}

json report_to_json(const EnergyReport& report) {
  const auto& d = report.deltas;
  return {{"units", {{"E_enc", "J"}, {"S", "bits"}, {"E_sto", "Wh"}, {"E_tra", "J"},
                     {"deltas", "percent"}}},
          {"baseline", scenario_json(report.baseline)},
          {"optimized", scenario_json(report.optimized)},
          {"deltas_percent",
           {{"E_enc", delta_json(d.encode)},
            {"S", delta_json(d.size)},
            {"E_sto", delta_json(d.storage)},
            {"E_tra", delta_json(d.transmit)}}}};
}

}  // namespace mcbe
