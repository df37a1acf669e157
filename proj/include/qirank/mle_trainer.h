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

#ifndef QIRANK_MLE_TRAINER_H_
#define QIRANK_MLE_TRAINER_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "qirank/core_types.h"
#include "qirank/glm_model.h"

namespace qirank {

struct TrainConfig {
  double l2_penalty = 1e-6;       // ridge on every parameter, intercepts included
  double grad_tolerance = 1e-8;   // stop when ||grad||_inf falls below this
  int max_iterations = 500;
  int history_size = 10;          // L-BFGS memory

  void validate() const;
};

struct FitResult {
  ModelParams params;
  double final_nll = 0.0;
  int iterations = 0;
  bool converged = false;
  // Penalized objective at the start point and after every accepted step.
  std::vector<double> nll_trace;
};

// Throws when the optimizer meets a non-finite objective.
class FitError : public std::runtime_error {
 public:
  FitError(const std::string& what, int iteration)
      : std::runtime_error(what), iteration_(iteration) {}
  int iteration() const { return iteration_; }

 private:
  int iteration_;
};

// Flat parameter layout: w (k entries), then one or two entries per intercept
// key in ascending key order, high before low.
std::vector<double> flatten(const ModelParams& params);
// Inverse of flatten(); `shape` supplies k, the keys and the intercept types.
ModelParams unflatten(std::span<const double> flat, const ModelParams& shape);

// All-zero parameters for `kind` covering every query of `dataset` (or the
// single shared key for the baseline).
ModelParams zero_params(const Dataset& dataset, ModelKind kind);

// -sum log P(label) + (l2/2)||params||^2. Every dataset query must have an
// intercept of the right type in `params`; extra intercepts only contribute
// to the penalty.
double negative_log_likelihood(const ModelParams& params, const Dataset& dataset,
                               ModelKind kind, double l2);

// Gradient of negative_log_likelihood() in the flatten() layout.
std::vector<double> gradient(const ModelParams& params, const Dataset& dataset,
                             ModelKind kind, double l2);

// Maximum likelihood fit from all-zero parameters by L-BFGS with Armijo
// backtracking. Deterministic for identical inputs. Benchmark ordering is not
// constrained.
FitResult fit(const Dataset& dataset, ModelKind kind, const TrainConfig& config);

}  // namespace qirank

#endif  // QIRANK_MLE_TRAINER_H_
