#!/usr/bin/env python3
# SPDX-FileCopyrightText: 2026 Contributors to the mcbe project.
# SPDX-License-Identifier: Apache-2.0
"""Regenerates the bundled sample inputs under data/."""

import json
import math
import pathlib

DATA = pathlib.Path(__file__).resolve().parent.parent / "data"

RESOLUTIONS = {
    "360p": (640, 360), "432p": (768, 432), "540p": (960, 540), "720p": (1280, 720),
    "1080p": (1920, 1080), "1440p": (2560, 1440), "2160p": (3840, 2160),
}
BASE_VMAF = {"360p": 55, "432p": 62, "540p": 70, "720p": 78, "1080p": 86, "1440p": 92,
             "2160p": 96}
CODEC_OFFSET = {"avc": 0, "hevc": 3, "av1": 5}


def sample_y4m(path, w=64, h=64, frames=8):
    out = bytearray(f"YUV4MPEG2 W{w} H{h} F30:1 Ip A1:1 C420jpeg\n".encode())
    for t in range(frames):
        out += b"FRAME\n"
        for y in range(h):
            for x in range(w):
                v = 128 + 60 * math.sin((x + 2 * t) / 5.0) * math.cos((y - t) / 7.0)
                v += 20 * (((x // 8) + (y // 8) + t) % 2)
                out.append(max(0, min(255, int(round(v)))))
        out += bytes([128]) * (2 * ((w + 1) // 2) * ((h + 1) // 2))
    path.write_bytes(bytes(out))


def example_ladder(path):
    rungs = {
        "avc": [("360p", 800_000), ("432p", 1_200_000), ("540p", 2_000_000), ("720p", 3_000_000),
                ("1080p", 4_500_000), ("1080p", 6_000_000), ("1440p", 8_000_000)],
        "hevc": [("360p", 600_000), ("540p", 1_400_000), ("720p", 3_600_000),
                 ("1080p", 4_800_000), ("1440p", 5_500_000), ("2160p", 9_000_000)],
        "av1": [("360p", 500_000), ("540p", 1_200_000), ("720p", 1_900_000),
                ("1080p", 2_900_000), ("1440p", 4_500_000), ("2160p", 7_500_000)],
    }
    doc = {"codecs": [{"id": c, "priority": i} for i, c in enumerate(rungs)], "rungs": []}
    for codec, items in rungs.items():
        for label, bitrate in items:
            w, h = RESOLUTIONS[label]
            doc["rungs"].append({"codec": codec, "width": w, "height": h,
                                 "bitrate_bps": bitrate})
    path.write_text(json.dumps(doc, indent=2) + "\n")


def constant_training(path):
    lines = ["segment_id,codec,width,height,bitrate_bps,E_Y,h,L_Y,vmaf"]
    for codec, off in CODEC_OFFSET.items():
        for label, (w, h) in RESOLUTIONS.items():
            vmaf = min(100, BASE_VMAF[label] + off)
            for i, bitrate in enumerate((500_000, 2_000_000, 8_000_000)):
                lines.append(f"train_s{i:03d},{codec},{w},{h},{bitrate},"
                             f"{20 + 10 * i}.0,{3 + i}.0,{100 + 20 * i}.0,{vmaf}")
    path.write_text("\n".join(lines) + "\n")


def energy_params(path):
    doc = {"storage_watts_per_bit": 1e-9, "storage_hours": 24,
           "encode_joules_per_pixel": {"avc": 1e-8, "hevc": 2e-8, "av1": 4e-8},
           "transmit_joules_per_bit": 5e-8, "deliveries": 100, "seg_seconds": 4, "fps": 30}
    path.write_text(json.dumps(doc, indent=2) + "\n")


if __name__ == "__main__":
    DATA.mkdir(exist_ok=True)
    sample_y4m(DATA / "sample_64x64.y4m")
    example_ladder(DATA / "example_ladder.json")
    constant_training(DATA / "constant_training.csv")
    energy_params(DATA / "energy_params.json")
