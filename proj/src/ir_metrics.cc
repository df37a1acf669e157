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

#include "qirank/ir_metrics.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "qirank/glm_model.h"

namespace qirank {

namespace {

void check_cutoff(int n) {
  if (n < 1) throw DataError("cutoff must be >= 1, got " + std::to_string(n));
}

double dcg(std::span<const int> labels, int n) {
  const std::size_t len = std::min<std::size_t>(labels.size(), n);
  double sum = 0.0;
  for (std::size_t j = 0; j < len; ++j) {
    sum += (std::exp2(labels[j]) - 1.0) / std::log2(static_cast<double>(j) + 2.0);
  }
  return sum;
}

}  // namespace

void MetricConfig::validate() const {
  if (cutoffs.empty()) throw DataError("no metric cutoffs");
  for (std::size_t i = 0; i < cutoffs.size(); ++i) {
    check_cutoff(cutoffs[i]);
    if (i > 0 && cutoffs[i] <= cutoffs[i - 1]) {
      throw DataError("metric cutoffs must be strictly ascending");
    }
  }
}

void MetricConfig::validate(const OrdinalScale& scale) const {
  validate();
  if (relevance_threshold < 1 || relevance_threshold >= scale.levels()) {
    throw DataError("relevance threshold " + std::to_string(relevance_threshold) +
                    " outside the label scale");
  }
}

double ndcg_at_n(std::span<const int> ranked_labels, int n) {
  check_cutoff(n);
  std::vector<int> ideal(ranked_labels.begin(), ranked_labels.end());
  std::sort(ideal.begin(), ideal.end(), std::greater<>());
  const double idcg = dcg(ideal, n);
  if (idcg <= 0.0) return 0.0;
  return dcg(ranked_labels, n) / idcg;
}

double precision_at_n(std::span<const int> ranked_labels, int n, int threshold) {
  check_cutoff(n);
  const std::size_t len = std::min<std::size_t>(ranked_labels.size(), n);
  const auto hits = std::count_if(ranked_labels.begin(), ranked_labels.begin() + len,
                                  [&](int l) { return l >= threshold; });
  return static_cast<double>(hits) / n;
}

double average_precision(std::span<const int> ranked_labels, int threshold) {
  double sum = 0.0;
  int relevant = 0;
  for (std::size_t j = 0; j < ranked_labels.size(); ++j) {
    if (ranked_labels[j] >= threshold) {
      ++relevant;
      sum += static_cast<double>(relevant) / static_cast<double>(j + 1);
    }
  }
  return relevant == 0 ? 0.0 : sum / relevant;
}

QueryMetrics evaluate_query(std::span<const double> scores,
                            std::span<const Record> group,
                            const MetricConfig& config) {
  if (group.empty()) throw DataError("cannot evaluate an empty query");
  if (scores.size() != group.size()) {
    throw DataError("score count does not match query size");
  }
  std::vector<int> ranked;
  ranked.reserve(group.size());
  for (std::size_t i : rank_by_scores(scores)) ranked.push_back(group[i].label);

  QueryMetrics m;
  for (int n : config.cutoffs) {
    m.ndcg_at.push_back(ndcg_at_n(ranked, n));
    m.precision_at.push_back(precision_at_n(ranked, n, config.relevance_threshold));
  }
  m.average_precision = average_precision(ranked, config.relevance_threshold);
  return m;
}

QueryMetrics evaluate_query(const ModelParams& params,
                            std::span<const Record> group,
                            const MetricConfig& config) {
  std::vector<double> scores;
  scores.reserve(group.size());
  for (const Record& r : group) scores.push_back(score(params.w, r.features));
  return evaluate_query(scores, group, config);
}

std::vector<QueryMetrics> evaluate_dataset(std::span<const double> scores,
                                           const Dataset& dataset,
                                           const MetricConfig& config) {
  if (scores.size() != dataset.size()) {
    throw DataError("score count " + std::to_string(scores.size()) +
                    " does not match record count " +
                    std::to_string(dataset.size()));
  }
  std::vector<QueryMetrics> out;
  out.reserve(dataset.num_queries());
  for (const QueryGroup& g : dataset.groups()) {
    out.push_back(evaluate_query(scores.subspan(g.begin, g.size()),
                                 dataset.group_records(g), config));
  }
  return out;
}

QueryMetrics mean_metrics(std::span<const QueryMetrics> per_query) {
  if (per_query.empty()) throw DataError("no queries to average");
  QueryMetrics mean;
  mean.ndcg_at.assign(per_query.front().ndcg_at.size(), 0.0);
  mean.precision_at.assign(per_query.front().precision_at.size(), 0.0);
  for (const QueryMetrics& q : per_query) {
    for (std::size_t c = 0; c < mean.ndcg_at.size(); ++c) {
      mean.ndcg_at[c] += q.ndcg_at[c];
      mean.precision_at[c] += q.precision_at[c];
    }
    mean.average_precision += q.average_precision;
  }
  const double n = static_cast<double>(per_query.size());
  for (double& v : mean.ndcg_at) v /= n;
  for (double& v : mean.precision_at) v /= n;
  mean.average_precision /= n;
  return mean;
}

}  // namespace qirank
