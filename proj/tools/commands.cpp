// SPDX-FileCopyrightText: 2026 Contributors to the mcbe project.
// SPDX-License-Identifier: Apache-2.0

#include "commands.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/core.h>
#include <json.hpp>

#include "mcbe/eliminate.hpp"
#include "mcbe/energy.hpp"
#include "mcbe/error.hpp"
#include "mcbe/export.hpp"
#include "mcbe/features.hpp"
#include "mcbe/io.hpp"
#include "mcbe/ladder_json.hpp"
#include "mcbe/model_bank.hpp"
#include "mcbe/parallel.hpp"
#include "mcbe/y4m.hpp"

namespace mcbe::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

class UsageError : public Error {
public:
  using Error::Error;
};

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
  } else {
    write_text_file(path, text);
  }
}

// ---------------------------------------------------------------------------
// features

struct FeaturesArgs {
  std::string input;
  std::optional<double> fps;
  double seg_seconds = 4.0;
  std::string output;
  std::string id_prefix;
};

int cmd_features(const FeaturesArgs& a, std::ostream& out) {
  Y4mVideo video;
  if (a.input == "-") {
    video = parse_y4m(std::cin);
  } else {
    std::ifstream in(a.input, std::ios::binary);
    if (!in) throw IoError(fmt::format("cannot open '{}' for reading", a.input));
    try {
      video = parse_y4m(in);
    } catch (const DataError& e) {
      throw DataError(fmt::format("'{}': {}", a.input, e.what()));
    }
  }
  const double fps = a.fps.value_or(video.header.fps());
  std::string prefix = a.id_prefix;
  if (prefix.empty()) prefix = a.input == "-" ? "stdin" : fs::path(a.input).stem().string();

  std::vector<SegmentFeatures> rows;
  for (const auto& seg : segment_stream(std::move(video.frames), fps, a.seg_seconds, prefix)) {
    rows.push_back(segment_features(seg));
  }
  emit(a.output, features_to_csv(rows), out);
  return kOk;
}

// ---------------------------------------------------------------------------
// train

struct TrainArgs {
  std::string input;
  std::uint64_t seed = 0;
  std::string output;
  std::vector<std::string> resolutions = default_resolution_set();
};

int cmd_train(const TrainArgs& a, std::ostream& out) {
  const auto samples = training_samples_from_csv(read_text_file(a.input));
  std::vector<KeyTrainingSummary> summary;
  const ModelBank bank = train_bank(samples, a.seed, a.resolutions, &summary);
  save_bank(bank, a.output);
  for (const auto& s : summary) {
    out << fmt::format("{} {} samples={} train_mae={:.4f}\n", s.key.first, s.key.second,
                       s.samples, s.training_mae);
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// optimize

struct OptimizeArgs {
  std::string ladder;
  std::string features;
  std::string bank;
  std::string segment;
  double jnd = 6.0;
  std::optional<double> vmax;
  std::string anchor = "last-retained";
  std::string output;
  std::string playlist;
  std::string rd_csv;
};

double default_vmax(double jnd) {
  if (jnd == 2.0) return 98.0;
  if (jnd == 4.0) return 96.0;
  return 94.0;
}

int cmd_optimize(const OptimizeArgs& a, std::ostream& out) {
  EliminationConfig cfg;
  cfg.jnd = a.jnd;
  cfg.vmax = a.vmax.value_or(default_vmax(a.jnd));
  cfg.anchor = a.anchor == "previous" ? JndAnchor::kPreviousInput : JndAnchor::kLastRetained;
  try {
    cfg.validate();
  } catch (const DataError& e) {
    throw UsageError(e.what());
  }

  const MultiCodecLadder ladder = ladder_from_json(read_json_file(a.ladder));
  const auto rows = features_from_csv(read_text_file(a.features));
  const SegmentFeatures* features = nullptr;
  if (a.segment.empty()) {
    if (rows.size() != 1) {
      throw UsageError(fmt::format("'{}' holds {} segments; choose one with --segment",
                                   a.features, rows.size()));
    }
    features = &rows.front();
  } else {
    for (const auto& r : rows) {
      if (r.segment_id == a.segment) features = &r;
    }
    if (features == nullptr) {
      throw DataError(fmt::format("segment '{}' not found in '{}'", a.segment, a.features));
    }
  }
  const ModelBank bank = load_bank(a.bank);

  const OptimizedLadder result = estimate_ladder(ladder, *features, bank, cfg);
  json doc = optimized_to_json(result);
  doc["segment_id"] = features->segment_id;
  doc["config"] = {{"jnd", cfg.jnd},
                   {"vmax", cfg.vmax},
                   {"jnd_anchor", cfg.anchor == JndAnchor::kLastRetained ? "last-retained"
                                                                         : "previous"}};
  emit(a.output, doc.dump(2) + "\n", out);
  if (!a.playlist.empty()) write_text_file(a.playlist, hls_master_playlist(result));
  if (!a.rd_csv.empty()) write_text_file(a.rd_csv, rd_curve_csv(result));
  return kOk;
}

// ---------------------------------------------------------------------------
// report

struct ReportArgs {
  std::string baseline;
  std::string optimized;
  std::string params;
  std::string output;
  std::string json_output;
};

std::vector<Rung> scenario_rungs(const std::string& path) {
  const json doc = read_json_file(path);
  try {
    if (doc.contains("retained")) return optimized_from_json(doc).retained;
    return all_rungs(ladder_from_json(doc));
  } catch (const DataError& e) {
    throw DataError(fmt::format("'{}': {}", path, e.what()));
  }
}

int cmd_report(const ReportArgs& a, std::ostream& out) {
  const auto baseline = scenario_rungs(a.baseline);
  const auto optimized = scenario_rungs(a.optimized);
  const EnergyParams params = energy_params_from_json(read_json_file(a.params));
  const EnergyReport report = energy_report(baseline, optimized, params);

  emit(a.output, report_to_csv(report), out);
  std::string json_path = a.json_output;
  if (json_path.empty() && !a.output.empty() && a.output != "-") {
    json_path = fs::path(a.output).replace_extension(".json").string();
  }
  if (!json_path.empty()) write_text_file(json_path, report_to_json(report).dump(2) + "\n");
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Prune multi-codec bitrate ladders and report the energy saved"};
  app.require_subcommand(1);
  app.footer("Environment: MCBE_THREADS caps worker threads.\n"
             "Exit codes: 0 success, 1 usage error, 2 data error, 3 I/O error.");

  FeaturesArgs fa;
  auto* features = app.add_subcommand("features", "Extract E_Y, h, L_Y per segment of a Y4M video");
  features->add_option("input", fa.input, "Input .y4m file, or - for standard input")->required();
  features->add_option("--fps", fa.fps, "Frame rate override (default: from the Y4M header)")
      ->check(CLI::PositiveNumber);
  features->add_option("--seg-seconds", fa.seg_seconds, "Segment duration in seconds")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  features->add_option("--id-prefix", fa.id_prefix,
                       "Segment id prefix (default: input file stem)");
  features->add_option("-o,--output", fa.output, "Features CSV path (default: stdout)");

  TrainArgs ta;
  auto* train = app.add_subcommand("train", "Train one VMAF forest per (codec, resolution)");
  train->add_option("input", ta.input, "Training CSV")->required();
  train->add_option("--seed", ta.seed, "Bootstrap seed")->capture_default_str();
  train->add_option("-o,--output", ta.output, "Model bank JSON path")->required();
  train->add_option("--resolutions", ta.resolutions, "Allowed resolution labels")
      ->delimiter(',')
      ->capture_default_str();

  OptimizeArgs oa;
  auto* optimize = app.add_subcommand("optimize", "Eliminate redundant ladder representations");
  optimize->add_option("ladder", oa.ladder, "Ladder JSON")->required();
  optimize->add_option("features", oa.features, "Features CSV")->required();
  optimize->add_option("bank", oa.bank, "Model bank JSON")->required();
  optimize->add_option("--segment", oa.segment,
                       "Segment id to use (required when the CSV has several rows)");
  optimize->add_option("--jnd", oa.jnd, "JND threshold in VMAF points (> 0)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  optimize->add_option("--vmax", oa.vmax,
                       "Perceptually lossless VMAF ceiling (default: 98/96/94 for JND 2/4/6, "
                       "otherwise 94)");
  optimize->add_option("--jnd-anchor", oa.anchor,
                       "Compare against the last retained rung or the previous input rung")
      ->check(CLI::IsMember({"last-retained", "previous"}))
      ->capture_default_str();
  optimize->add_option("-o,--output", oa.output, "Optimized ladder JSON path (default: stdout)");
  optimize->add_option("--playlist", oa.playlist, "Write an HLS master playlist (M3U8)");
  optimize->add_option("--rd-csv", oa.rd_csv, "Write rate-quality points as CSV");

  ReportArgs ra;
  auto* report = app.add_subcommand("report", "Baseline vs optimized energy report");
  report->add_option("baseline", ra.baseline, "Baseline ladder or optimized-ladder JSON")
      ->required();
  report->add_option("optimized", ra.optimized, "Optimized ladder JSON")->required();
  report->add_option("params", ra.params, "Energy parameters JSON")->required();
  report->add_option("-o,--output", ra.output, "Report CSV path (default: stdout)");
  report->add_option("--json", ra.json_output,
                     "Report JSON path (default: CSV path with .json extension)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*features) return cmd_features(fa, out);
    if (*train) return cmd_train(ta, out);
    if (*optimize) return cmd_optimize(oa, out);
    if (*report) return cmd_report(ra, out);
  } catch (const UsageError& e) {
    err << "mcbe: usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const IoError& e) {
    err << "mcbe: I/O error: " << e.what() << "\n";
    return kIoError;
  } catch (const DataError& e) {
    err << "mcbe: data error: " << e.what() << "\n";
    return kDataError;
  }
  return kUsage;
}

}  // namespace mcbe::cli
