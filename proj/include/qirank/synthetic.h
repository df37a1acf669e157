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

#ifndef QIRANK_SYNTHETIC_H_
#define QIRANK_SYNTHETIC_H_

#include <cstdint>
#include <filesystem>
#include <vector>

#include "qirank/core_types.h"
#include "qirank/glm_model.h"

namespace qirank {

// Sampling distributions. Defaults: w uniform [-1,1], intercepts uniform
// [-1,1], features uniform [-1,1]; for trinary kinds the low benchmark is the
// drawn intercept and high = low + gap, gap uniform [0.5,1.5].
struct SyntheticSpec {
  double weight_range = 1.0;
  double intercept_range = 1.0;
  double gap_min = 0.5;
  double gap_max = 1.5;
  double feature_range = 1.0;
  // Adds query_shift * theta_i * v to every feature vector of query i, where
  // v is a random unit direction drawn once per dataset and theta_i the
  // query's (low) intercept, so feature levels drift across queries together
  // with their benchmarks. Labels are drawn from the shifted features. 0
  // leaves the sampling stream untouched.
  double query_shift = 0.0;
};

struct SyntheticData {
  Dataset dataset;
  ModelParams truth;
};

// Labels are drawn from the exact model probabilities. Query ids are "1".."n".
// Fully determined by the arguments.
SyntheticData generate_synthetic(int n_queries, int results_per_query, int k,
                                 ModelKind kind, std::uint64_t seed,
                                 const SyntheticSpec& spec = {});

struct SyntheticFold {
  Dataset train;
  Dataset validation;
  Dataset test;
};

// Splits one generated dataset into five query-disjoint parts and rotates
// them LETOR style: fold f trains on parts f..f+2, validates on f+3 and tests
// on f+4 (mod 5).
std::vector<SyntheticFold> make_folds(const Dataset& data);

// Writes root/Fold1..Fold5/{train,vali,test}.txt.
void write_fold_tree(const std::vector<SyntheticFold>& folds,
                     const std::filesystem::path& root);

}  // namespace qirank

#endif  // QIRANK_SYNTHETIC_H_
