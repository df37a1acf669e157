/*
 * Copyright 2026 The qirank Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "qirank/model_io.h"

#include <filesystem>
#include <fstream>
#include <random>

#include "gtest/gtest.h"

namespace qirank {
namespace {

namespace fs = std::filesystem;

SavedModel random_model(std::mt19937_64& rng, ModelKind kind) {
  std::uniform_real_distribution<double> val(-1e3, 1e3);
  SavedModel m;
  m.kind = kind;
  for (int i = 0; i < 4; ++i) m.params.w.push_back(val(rng) / 7.0);
  if (kind == ModelKind::kNoInterceptBaseline) {
    m.params.intercepts[kSharedInterceptKey] = val(rng);
  } else {
    for (int q = 0; q < 5; ++q) {
      const std::string key = "q" + std::to_string(q);
      if (uses_threshold_pair(kind)) {
        m.params.intercepts[key] = ThresholdPair{val(rng) / 3.0, std::ldexp(val(rng), -50)};
      } else {
        m.params.intercepts[key] = val(rng) / 11.0;
      }
    }
  }
  m.config.l2_penalty = 0.125;
  m.config.max_iterations = 77;
  return m;
}

void expect_same(const SavedModel& a, const SavedModel& b) {
  EXPECT_EQ(a.kind, b.kind);
  EXPECT_EQ(a.params.w, b.params.w);
  ASSERT_EQ(a.params.intercepts.size(), b.params.intercepts.size());
  for (const auto& [key, ic] : a.params.intercepts) {
    const Intercept& other = b.params.intercepts.at(key);
    if (const auto* hl = std::get_if<ThresholdPair>(&ic)) {
      ASSERT_TRUE(std::holds_alternative<ThresholdPair>(other));
      EXPECT_EQ(hl->high, std::get<ThresholdPair>(other).high);
      EXPECT_EQ(hl->low, std::get<ThresholdPair>(other).low);
    } else {
      EXPECT_EQ(std::get<double>(ic), std::get<double>(other));
    }
  }
  EXPECT_EQ(a.config.l2_penalty, b.config.l2_penalty);
  EXPECT_EQ(a.config.grad_tolerance, b.config.grad_tolerance);
  EXPECT_EQ(a.config.max_iterations, b.config.max_iterations);
  EXPECT_EQ(a.config.history_size, b.config.history_size);
}

TEST(ModelJson, ExactRoundTrip) {
  std::mt19937_64 rng(13);
  for (ModelKind kind : {ModelKind::kBinary, ModelKind::kTrinaryCascade,
                         ModelKind::kTrinaryCascadeAlt, ModelKind::kNoInterceptBaseline}) {
    for (int i = 0; i < 20; ++i) {
      const SavedModel m = random_model(rng, kind);
      const std::string text = model_to_json(m);
      const SavedModel back = model_from_json(text);
      expect_same(m, back);
      EXPECT_EQ(model_to_json(back), text);
    }
  }
}

TEST(ModelJson, FileRoundTrip) {
  const fs::path dir = fs::temp_directory_path() / "qirank_model_io";
  fs::create_directories(dir);
  std::mt19937_64 rng(2);
  const SavedModel m = random_model(rng, ModelKind::kTrinaryCascade);
  save_model(m, dir / "m.json");
  expect_same(m, load_model(dir / "m.json"));
  EXPECT_THROW(load_model(dir / "missing.json"), DataError);
  EXPECT_THROW(save_model(m, dir / "no" / "such" / "m.json"), DataError);
}

TEST(ModelJson, RejectsMalformed) {
  EXPECT_THROW(model_from_json("not json"), DataError);
  EXPECT_THROW(model_from_json("{}"), DataError);
  EXPECT_THROW(model_from_json(R"({"kind":"probit","k":1,"w":[1],"intercepts":{"1":0}})"),
               DataError);
  // k disagrees with w.
  EXPECT_THROW(model_from_json(R"({"kind":"binary","k":2,"w":[1],"intercepts":{"1":0}})"),
               DataError);
  // Binary model with a threshold pair.
  EXPECT_THROW(
      model_from_json(R"({"kind":"binary","k":1,"w":[1],"intercepts":{"1":[1,0]}})"),
      DataError);
  // Trinary model with a bare number.
  EXPECT_THROW(
      model_from_json(R"({"kind":"trinary","k":1,"w":[1],"intercepts":{"1":0.5}})"),
      DataError);
  EXPECT_THROW(
      model_from_json(R"({"kind":"binary","k":1,"w":["x"],"intercepts":{"1":0}})"),
      DataError);
}

}  // namespace
}  // namespace qirank
