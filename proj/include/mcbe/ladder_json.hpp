// SPDX-FileCopyrightText: 2026 Contributors to the mcbe project.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <json.hpp>

#include "mcbe/ladder.hpp"

namespace mcbe {

// Ladder documents:
//   {"codecs": [{"id": "avc", "priority": 0}, ...],
//    "rungs":  [{"codec": "avc", "width": 640, "height": 360,
//                "bitrate_bps": 365000, "vmaf": 71.2}, ...]}
// "vmaf" is optional; an optional "label" overrides the derived resolution
// label. Parsing validates the result with validate_ladder().

MultiCodecLadder ladder_from_json(const nlohmann::json& doc);
nlohmann::json ladder_to_json(const MultiCodecLadder& ladder);

nlohmann::json rung_to_json(const Rung& rung);
Rung rung_from_json(const nlohmann::json& obj);

/// Optimized ladder documents carry "codecs", "retained", "eliminated" (rungs
/// with an extra "reason") and an "encode_plan" listing, per codec, the
/// resolution/bitrate pairs that still have to be encoded.
nlohmann::json optimized_to_json(const OptimizedLadder& ladder);
OptimizedLadder optimized_from_json(const nlohmann::json& doc);

}  // namespace mcbe
