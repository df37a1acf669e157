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

// Ranking measures over a query's labels listed in ranked order (best first).
//
//   NDCG@n: gain 2^label - 1, discount 1/log2(j+1) at 1-based position j
//           (position 1 included), normalized by the ideal ordering; 0 when
//           the ideal DCG is 0. Lists shorter than n truncate the sum.
//   P@n:    relevant count in the top min(n, len) divided by n.
//   AP:     mean of P@j over relevant positions j; 0 with no relevant result.
//
// "Relevant" means label >= relevance_threshold.

#ifndef QIRANK_IR_METRICS_H_
#define QIRANK_IR_METRICS_H_

#include <span>
#include <vector>

#include "qirank/core_types.h"

namespace qirank {

struct MetricConfig {
  std::vector<int> cutoffs = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  int relevance_threshold = 1;

  // Cutoffs must be positive and strictly ascending.
  void validate() const;
  void validate(const OrdinalScale& scale) const;
};

struct QueryMetrics {
  std::vector<double> ndcg_at;       // parallel to MetricConfig::cutoffs
  std::vector<double> precision_at;  // parallel to MetricConfig::cutoffs
  double average_precision = 0.0;
};

double ndcg_at_n(std::span<const int> ranked_labels, int n);
double precision_at_n(std::span<const int> ranked_labels, int n, int threshold);
double average_precision(std::span<const int> ranked_labels, int threshold);

// Ranks the group by descending score (ties keep record order) and evaluates.
QueryMetrics evaluate_query(std::span<const double> scores,
                            std::span<const Record> group,
                            const MetricConfig& config);
// Scores with w alone.
QueryMetrics evaluate_query(const ModelParams& params,
                            std::span<const Record> group,
                            const MetricConfig& config);

// Per-query evaluation of every group in `dataset`, scores parallel to its
// records.
std::vector<QueryMetrics> evaluate_dataset(std::span<const double> scores,
                                           const Dataset& dataset,
                                           const MetricConfig& config);

// Unweighted mean over queries.
QueryMetrics mean_metrics(std::span<const QueryMetrics> per_query);

}  // namespace qirank

#endif  // QIRANK_IR_METRICS_H_
