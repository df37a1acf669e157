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

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace qirank {

using nlohmann::json;

std::string model_to_json(const SavedModel& model) {
  json doc;
  doc["kind"] = std::string(to_string(model.kind));
  doc["k"] = model.params.w.size();
  doc["w"] = model.params.w;
  json intercepts = json::object();
  for (const auto& [qid, ic] : model.params.intercepts) {
    if (const auto* pair = std::get_if<ThresholdPair>(&ic)) {
      intercepts[qid] = json::array({pair->high, pair->low});
    } else {
      intercepts[qid] = std::get<double>(ic);
    }
  }
  doc["intercepts"] = std::move(intercepts);
  doc["config"] = {{"l2_penalty", model.config.l2_penalty},
                   {"grad_tolerance", model.config.grad_tolerance},
                   {"max_iterations", model.config.max_iterations},
                   {"history_size", model.config.history_size}};
  return doc.dump(2) + "\n";
}

SavedModel model_from_json(const std::string& text) {
  SavedModel model;
  try {
    const json doc = json::parse(text);
    model.kind = parse_model_kind(doc.at("kind").get<std::string>());
    const auto k = doc.at("k").get<std::size_t>();
    model.params.w = doc.at("w").get<std::vector<double>>();
    if (model.params.w.size() != k) {
      throw DataError("model file: w has " + std::to_string(model.params.w.size()) +
                      " entries but k is " + std::to_string(k));
    }
    const bool pairs = uses_threshold_pair(model.kind);
    for (const auto& [qid, value] : doc.at("intercepts").items()) {
      if (pairs) {
        const auto hl = value.get<std::vector<double>>();
        if (hl.size() != 2) {
          throw DataError("model file: intercept for '" + qid +
                          "' must be a [high, low] pair");
        }
        model.params.intercepts.emplace(qid, ThresholdPair{hl[0], hl[1]});
      } else {
        model.params.intercepts.emplace(qid, value.get<double>());
      }
    }
    if (doc.contains("config")) {
      const json& c = doc["config"];
      model.config.l2_penalty = c.value("l2_penalty", model.config.l2_penalty);
      model.config.grad_tolerance =
          c.value("grad_tolerance", model.config.grad_tolerance);
      model.config.max_iterations =
          c.value("max_iterations", model.config.max_iterations);
      model.config.history_size = c.value("history_size", model.config.history_size);
    }
  } catch (const json::exception& e) {
    throw DataError(std::string("model file: ") + e.what());
  }
  for (double v : flatten(model.params)) {
    if (!std::isfinite(v)) throw DataError("model file: non-finite parameter");
  }
  return model;
}

void save_model(const SavedModel& model, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot write " + path.string());
  out << model_to_json(model);
  if (!out) throw DataError("write error on " + path.string());
}

SavedModel load_model(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return model_from_json(buf.str());
}

}  // namespace qirank
