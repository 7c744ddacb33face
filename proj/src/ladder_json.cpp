// SPDX-FileCopyrightText: 2026 Contributors to the mcbe project.
// SPDX-License-Identifier: Apache-2.0

#include "mcbe/ladder_json.hpp"

#include <map>

#include <fmt/core.h>

#include "mcbe/error.hpp"

namespace mcbe {

using nlohmann::json;

namespace {

template <typename Fn>
auto guarded(std::string_view what, Fn&& fn) {
  try {
    return fn();
  } catch (const json::exception& e) {
    throw DataError(fmt::format("{}: {}", what, e.what()));
  }
}

std::vector<Codec> codecs_from_json(const json& arr) {
  std::vector<Codec> codecs;
  for (const auto& c : arr) {
    codecs.push_back(Codec{c.at("id").get<std::string>(), c.at("priority").get<int>()});
  }
  return codecs;
}

json codecs_to_json(const std::vector<Codec>& codecs) {
  json arr = json::array();
  for (const auto& c : codecs) arr.push_back({{"id", c.id}, {"priority", c.priority}});
  return arr;
}

}  // namespace

json rung_to_json(const Rung& rung) {
  json obj = {{"codec", rung.codec},
              {"width", rung.resolution.width},
              {"height", rung.resolution.height},
              {"bitrate_bps", rung.bitrate}};
  if (!rung.resolution.label.empty()) obj["label"] = rung.resolution.label;
  if (rung.vmaf) obj["vmaf"] = *rung.vmaf;
  return obj;
}

Rung rung_from_json(const json& obj) {
  return guarded("invalid rung", [&] {
    Rung r;
    r.codec = obj.at("codec").get<std::string>();
    r.resolution.width = obj.at("width").get<int>();
    r.resolution.height = obj.at("height").get<int>();
    if (obj.contains("label")) r.resolution.label = obj.at("label").get<std::string>();
    const auto& b = obj.at("bitrate_bps");
    if (!b.is_number_integer()) {
      throw DataError(fmt::format("bitrate_bps must be an integer, got {}", b.dump()));
    }
    r.bitrate = b.get<Bitrate>();
    if (obj.contains("vmaf") && !obj.at("vmaf").is_null()) r.vmaf = obj.at("vmaf").get<double>();
    return r;
  });
}

MultiCodecLadder ladder_from_json(const json& doc) {
  return guarded("invalid ladder document", [&] {
    MultiCodecLadder ladder;
    for (auto& c : codecs_from_json(doc.at("codecs"))) {
      ladder.codecs.push_back(CodecLadder{std::move(c), {}});
    }
    for (const auto& obj : doc.at("rungs")) {
      Rung r = rung_from_json(obj);
      auto* target = ladder.find(r.codec);
      if (target == nullptr) {
        throw DataError(fmt::format("rung references unknown codec '{}'", r.codec));
      }
      target->rungs.push_back(std::move(r));
    }
    return validate_ladder(std::move(ladder));
  });
}

json ladder_to_json(const MultiCodecLadder& ladder) {
  std::vector<Codec> codecs;
  json rungs = json::array();
  for (const auto& c : ladder.codecs) {
    codecs.push_back(c.codec);
    for (const auto& r : c.rungs) rungs.push_back(rung_to_json(r));
  }
  return {{"codecs", codecs_to_json(codecs)}, {"rungs", rungs}};
}

json optimized_to_json(const OptimizedLadder& ladder) {
  json retained = json::array();
  for (const auto& r : ladder.retained) retained.push_back(rung_to_json(r));

  json eliminated = json::array();
  for (const auto& e : ladder.eliminated) {
    json obj = rung_to_json(e.rung);
    obj["reason"] = std::string(to_string(e.reason));
    eliminated.push_back(std::move(obj));
  }

  json plan = json::array();
  for (const auto& c : ladder.codecs) {
    json reps = json::array();
    for (const auto& r : ladder.retained) {
      if (r.codec != c.id) continue;
      reps.push_back({{"width", r.resolution.width},
                      {"height", r.resolution.height},
                      {"bitrate_bps", r.bitrate}});
    }
    plan.push_back({{"codec", c.id}, {"representations", reps}});
  }

  return {{"codecs", codecs_to_json(ladder.codecs)},
          {"retained", retained},
          {"eliminated", eliminated},
          {"encode_plan", plan}};
}

OptimizedLadder optimized_from_json(const json& doc) {
  return guarded("invalid optimized ladder document", [&] {
    OptimizedLadder out;
    out.codecs = codecs_from_json(doc.at("codecs"));
    for (const auto& obj : doc.at("retained")) out.retained.push_back(rung_from_json(obj));
    for (const auto& obj : doc.at("eliminated")) {
      out.eliminated.push_back(EliminatedRung{
          rung_from_json(obj), parse_elimination_reason(obj.at("reason").get<std::string>())});
    }
    return out;
  });
}

}  // namespace mcbe
