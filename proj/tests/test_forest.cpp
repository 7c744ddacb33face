// SPDX-FileCopyrightText: 2026 Contributors to the mcbe project.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <random>

#include <json.hpp>

#include "mcbe/error.hpp"
#include "mcbe/forest.hpp"
#include "mcbe/model_bank.hpp"
#include "oracle/tree_trace.hpp"
#include "support.hpp"

using namespace mcbe;

namespace {

std::vector<TrainingSample> constant_samples(std::size_t n, double target, std::mt19937_64& rng) {
  auto s = testing::synthetic_rd_samples(n, 0.0, rng);
  for (auto& x : s) x.target_vmaf = target;
  return s;
}

FeatureVector random_input(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> e(0.0, 200.0), h(0.0, 60.0), l(0.0, 255.0),
      b(5e4, 3e7);
  return {e(rng), h(rng), l(rng), b(rng)};
}

ForestParams small(int trees) {
  ForestParams p;
  p.n_estimators = trees;
  return p;
}

}  // namespace

TEST_CASE("constant targets give constant predictions") {
  std::mt19937_64 rng(1);
  const auto samples = constant_samples(200, 73.0, rng);
  const auto model = train_forest(samples, 5);
  REQUIRE(model.trees().size() == 100);
  for (const auto& t : model.trees()) {
    for (const auto& n : t.nodes()) {
      if (n.is_leaf()) CHECK(n.value == 73.0);
    }
  }
  for (int i = 0; i < 20; ++i) CHECK(model.predict(random_input(rng)) == 73.0);
}

TEST_CASE("noiseless monotone function is fit closely") {
  std::mt19937_64 rng(2);
  std::vector<TrainingSample> samples;
  for (int i = 0; i < 1000; ++i) {
    TrainingSample s;
    const double b = 1e5 + 1e4 * i;
    s.features = {50.0, 10.0, 120.0, b};
    s.target_vmaf = 100.0 * (1.0 - std::exp(-b / 3e6));
    s.codec = "avc";
    s.resolution = {1920, 1080, {}};
    samples.push_back(s);
  }
  const auto model = train_forest(samples, 11);
  double mae = 0.0;
  for (const auto& s : samples) mae += std::abs(model.predict(s.features) - s.target_vmaf);
  mae /= static_cast<double>(samples.size());
  CHECK(mae <= 0.5);
}

TEST_CASE("training is deterministic and schedule independent") {
  std::mt19937_64 rng(3);
  const auto samples = testing::synthetic_rd_samples(300, 1.0, rng);
  ModelBank a, b, c, d;
  a.add(train_forest(samples, 42, {}, 1));
  b.add(train_forest(samples, 42, {}, 4));
  c.add(train_forest(samples, 42, {}, 1));
  d.add(train_forest(samples, 43, {}, 1));
  CHECK(bank_to_text(a) == bank_to_text(b));
  CHECK(bank_to_text(a) == bank_to_text(c));
  CHECK(bank_to_text(a) != bank_to_text(d));
}

TEST_CASE("bootstrap indices depend only on seed and tree index") {
  const auto a = bootstrap_indices(9, 3, 50);
  CHECK(a == bootstrap_indices(9, 3, 50));
  CHECK(a != bootstrap_indices(9, 4, 50));
  CHECK(a != bootstrap_indices(10, 3, 50));
  for (auto i : a) CHECK(i < 50);
}

TEST_CASE("hand-built single split") {
  std::vector<DecisionTree::Node> nodes(3);
  nodes[0] = {3, 1e6, 1, 2, 0.0};
  nodes[1].value = 50.0;
  nodes[2].value = 80.0;
  const ForestModel model("avc", "1080p", small(1), 0, {DecisionTree(nodes)});
  CHECK(model.predict({1, 1, 1, 5e5}) == 50.0);
  CHECK(model.predict({1, 1, 1, 2e6}) == 80.0);
  CHECK(model.predict({1, 1, 1, 1e6}) == 50.0);  // <= goes left
}

TEST_CASE("prediction equals explicit per-tree traces") {
  std::mt19937_64 rng(4);
  const auto samples = testing::synthetic_rd_samples(400, 1.0, rng);
  const auto model = train_forest(samples, 8);
  for (int i = 0; i < 50; ++i) {
    const auto x = random_input(rng);
    CHECK(std::abs(model.predict(x) - oracle::forest_average(model, x)) <= 1e-12);
  }
}

TEST_CASE("tree shape and prediction range") {
  std::mt19937_64 rng(5);
  auto samples = testing::synthetic_rd_samples(500, 2.0, rng);
  double lo = 100.0, hi = 0.0;
  for (const auto& s : samples) {
    lo = std::min(lo, s.target_vmaf);
    hi = std::max(hi, s.target_vmaf);
  }
  const auto model = train_forest(samples, 1, small(20));
  for (const auto& t : model.trees()) {
    CHECK(t.depth() <= 14);
    for (const auto& n : t.nodes()) {
      if (n.is_leaf()) {
        CHECK(n.value >= lo);
        CHECK(n.value <= hi);
      }
    }
  }
  for (int i = 0; i < 200; ++i) {
    const double v = model.predict(random_input(rng));
    CHECK(v >= lo - 1e-9);
    CHECK(v <= hi + 1e-9);
  }
}

TEST_CASE("depth limit is honoured") {
  std::mt19937_64 rng(6);
  const auto samples = testing::synthetic_rd_samples(300, 5.0, rng);
  ForestParams p = small(3);
  p.max_depth = 2;
  const auto model = train_forest(samples, 1, p);
  for (const auto& t : model.trees()) {
    CHECK(t.depth() <= 2);
    CHECK(t.nodes().size() <= 7);
  }
}

TEST_CASE("training input errors") {
  std::mt19937_64 rng(7);
  auto samples = testing::synthetic_rd_samples(10, 1.0, rng);
  CHECK_THROWS_AS(train_forest({}, 1), DataError);
  CHECK_THROWS_AS(train_forest(std::span(samples).first(1), 1), DataError);
  auto mixed = samples;
  mixed[3].codec = "hevc";
  CHECK_THROWS_WITH_AS(train_forest(mixed, 1), doctest::Contains("hevc"), DataError);
  auto other_res = samples;
  other_res[2].resolution = {1280, 720, {}};
  CHECK_THROWS_AS(train_forest(other_res, 1), DataError);
  auto bad = samples;
  bad[0].target_vmaf = 101.0;
  CHECK_THROWS_AS(train_forest(bad, 1), DataError);
}

TEST_CASE("untrained or malformed models") {
  ForestModel empty;
  CHECK_THROWS_AS(empty.predict({1, 1, 1, 1}), DataError);
  CHECK_THROWS_AS(DecisionTree(std::vector<DecisionTree::Node>{}), DataError);
  std::vector<DecisionTree::Node> nodes(3);
  nodes[0] = {0, 1.0, 0, 1, 0.0};  // self loop
  CHECK_THROWS_AS(DecisionTree{nodes}, DataError);
  nodes[0] = {7, 1.0, 1, 2, 0.0};  // no such feature
  CHECK_THROWS_AS(DecisionTree{nodes}, DataError);
  CHECK_THROWS_AS(ForestModel("avc", "1080p", {}, 0,
                              {DecisionTree({DecisionTree::Node{}})}),  // 1 tree, 100 expected
                  DataError);
}

// ---------------------------------------------------------------------------
// Model bank

TEST_CASE("bank round trip predicts identically") {
  std::mt19937_64 rng(10);
  auto samples = testing::synthetic_rd_samples(300, 1.0, rng);
  auto hevc = testing::synthetic_rd_samples(200, 1.0, rng);
  for (auto& s : hevc) {
    s.codec = "hevc";
    s.resolution = {1280, 720, {}};
  }
  samples.insert(samples.end(), hevc.begin(), hevc.end());
  std::vector<KeyTrainingSummary> summary;
  const ModelBank bank = train_bank(samples, 3, default_resolution_set(), &summary, small(10));
  REQUIRE(summary.size() == 2);
  CHECK(summary[0].key == ModelBank::Key{"avc", "1080p"});
  CHECK(summary[0].samples == 300);
  CHECK(summary[1].samples == 200);

  const auto text = bank_to_text(bank);
  const ModelBank back = bank_from_text(text);
  CHECK(bank_to_text(back) == text);
  for (int i = 0; i < 100; ++i) {
    const auto x = random_input(rng);
    CHECK(back.find("avc", "1080p")->predict(x) == bank.find("avc", "1080p")->predict(x));
    CHECK(back.find("hevc", "720p")->predict(x) == bank.find("hevc", "720p")->predict(x));
  }
}

TEST_CASE("bank file corruption is detected") {
  ModelBank bank;
  bank.add(testing::constant_forest("avc", "360p", 60.0));
  const auto text = bank_to_text(bank);

  auto versioned = nlohmann::json::parse(text);
  versioned["version"] = 2;
  CHECK_THROWS_WITH_AS(bank_from_text(versioned.dump()), doctest::Contains("version"), DataError);

  CHECK_THROWS_AS(bank_from_text(text.substr(0, text.size() / 2)), DataError);

  auto tampered = nlohmann::json::parse(text);
  tampered["models"][0]["trees"][0]["value"][0] = 61.0;
  CHECK_THROWS_WITH_AS(bank_from_text(tampered.dump()), doctest::Contains("checksum"), DataError);

  auto wrong_format = nlohmann::json::parse(text);
  wrong_format["format"] = "something-else";
  CHECK_THROWS_AS(bank_from_text(wrong_format.dump()), DataError);
}

TEST_CASE("bank keys") {
  ModelBank bank;
  bank.add(testing::constant_forest("avc", "360p", 60.0));
  CHECK_THROWS_WITH_AS(bank.add(testing::constant_forest("avc", "360p", 61.0)),
                       doctest::Contains("duplicate"), DataError);
  CHECK_THROWS_WITH_AS(bank.add(testing::constant_forest("avc", "480p", 61.0)),
                       doctest::Contains("480p"), DataError);
  CHECK(bank.find("avc", "360p") != nullptr);
  CHECK(bank.find("hevc", "360p") == nullptr);
}

TEST_CASE("predict_ladder") {
  const SegmentFeatures features{"s", 40.0, 10.0, 120.0};

  SUBCASE("single rung") {
    ModelBank bank;
    bank.add(testing::constant_forest("avc", "1080p", 73.0));
    MultiCodecLadder ladder;
    ladder.codecs.push_back({{"avc", 0}, {testing::rung("avc", 4'000'000)}});
    const auto out = predict_ladder(bank, ladder, features);
    CHECK(*out.codecs[0].rungs[0].vmaf == 73.0);
  }

  SUBCASE("missing key is named") {
    ModelBank bank;
    bank.add(testing::constant_forest("avc", "1080p", 73.0));
    MultiCodecLadder ladder;
    ladder.codecs.push_back(
        {{"avc", 0}, {testing::rung("avc", 1'000'000, std::nullopt, {1280, 720, {}})}});
    CHECK_THROWS_WITH_AS(predict_ladder(bank, ladder, features), doctest::Contains("(avc, 720p)"),
                         DataError);
  }

  SUBCASE("3 codecs x 7 resolutions") {
    std::mt19937_64 rng(12);
    ModelBank bank;
    MultiCodecLadder ladder;
    const char* ids[] = {"avc", "hevc", "av1"};
    for (int c = 0; c < 3; ++c) {
      CodecLadder cl{{ids[c], c}, {}};
      for (std::size_t r = 0; r < 7; ++r) {
        const auto& res = testing::standard_resolutions()[r];
        auto samples = testing::synthetic_rd_samples(40, 1.0, rng);
        for (auto& s : samples) {
          s.codec = ids[c];
          s.resolution = res;
        }
        bank.add(train_forest(samples, 1, small(5)));
        cl.rungs.push_back(testing::rung(ids[c], 500'000 * static_cast<Bitrate>(r + 1),
                                         std::nullopt, res));
      }
      ladder.codecs.push_back(cl);
    }
    const auto out = predict_ladder(bank, ladder, features);
    for (const auto& c : out.codecs) {
      for (const auto& r : c.rungs) CHECK(r.vmaf.has_value());
    }
    for (auto [c, t] : {std::pair{0, 0}, {0, 6}, {1, 3}, {2, 2}, {2, 5}}) {
      const auto& r = out.codecs[static_cast<std::size_t>(c)].rungs[static_cast<std::size_t>(t)];
      const double direct = bank.find(r.codec, r.resolution.key())
                                ->predict(make_feature_vector(features, r.bitrate));
      CHECK(*r.vmaf == direct);
    }
  }
}

TEST_CASE("training CSV") {
  const std::string good =
      "segment_id,codec,width,height,bitrate_bps,E_Y,h,L_Y,vmaf\n"
      "a,avc,1920,1080,1000000,30.5,4.2,120.0,71.5\n"
      "a,avc,1920,1080,2000000,30.5,4.2,120.0,80\n";
  const auto s = training_samples_from_csv(good);
  REQUIRE(s.size() == 2);
  CHECK(s[0].resolution.key() == "1080p");
  CHECK(s[1].features[3] == 2e6);
  CHECK(s[1].target_vmaf == 80.0);

  const std::string bad = good + "b,avc,1920,1080,3000000,30.5,4.2,120.0,120\n";
  CHECK_THROWS_WITH_AS(training_samples_from_csv(bad), doctest::Contains("line 4"), DataError);
  CHECK_THROWS_AS(training_samples_from_csv(good + "b,avc,1920,1080,0,1,1,1,50\n"), DataError);
  CHECK_THROWS_AS(training_samples_from_csv("codec,vmaf\n"), DataError);
}

TEST_CASE("train_bank needs two samples per key") {
  std::mt19937_64 rng(13);
  auto samples = testing::synthetic_rd_samples(5, 1.0, rng);
  samples[4].codec = "hevc";
  CHECK_THROWS_WITH_AS(train_bank(samples, 1, default_resolution_set()),
                       doctest::Contains("hevc"), DataError);
}
