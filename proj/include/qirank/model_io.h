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

// JSON model files:
//
//   {"kind": "trinary", "k": 2, "w": [0.5, -1.25],
//    "intercepts": {"q1": [0.9, -0.3], "q2": [1.1, 0.2]},
//    "config": {"l2_penalty": 1e-06, "grad_tolerance": 1e-08,
//               "max_iterations": 500, "history_size": 10}}
//
// Binary kinds store a bare number per query; the shared-intercept baseline
// uses the key "". Numbers are written in shortest round-trip form.

#ifndef QIRANK_MODEL_IO_H_
#define QIRANK_MODEL_IO_H_

#include <filesystem>
#include <string>

#include "qirank/core_types.h"
#include "qirank/glm_model.h"
#include "qirank/mle_trainer.h"

namespace qirank {

struct SavedModel {
  ModelKind kind = ModelKind::kBinary;
  ModelParams params;
  TrainConfig config;
};

std::string model_to_json(const SavedModel& model);
SavedModel model_from_json(const std::string& text);

void save_model(const SavedModel& model, const std::filesystem::path& path);
SavedModel load_model(const std::filesystem::path& path);

}  // namespace qirank

#endif  // QIRANK_MODEL_IO_H_
