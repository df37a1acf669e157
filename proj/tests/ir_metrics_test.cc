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
#include <random>

#include "gtest/gtest.h"
#include "qirank/glm_model.h"
#include "test_oracles.h"

namespace qirank {
namespace {

using L = std::vector<int>;

constexpr double kNdcgSwapped = 0.630929753571457437;  // 1/log2(3)

std::vector<Record> group_of(const L& labels) {
  std::vector<Record> g;
  for (int l : labels) g.push_back(Record{"q", l, {0.0}, ""});
  return g;
}

TEST(Ndcg, Examples) {
  EXPECT_DOUBLE_EQ(ndcg_at_n(L{2, 0}, 2), 1.0);
  EXPECT_NEAR(ndcg_at_n(L{0, 2}, 2), kNdcgSwapped, 1e-15);
  EXPECT_EQ(ndcg_at_n(L{0, 0, 0}, 3), 0.0);
  EXPECT_DOUBLE_EQ(ndcg_at_n(L{1}, 10), 1.0);
  EXPECT_EQ(ndcg_at_n(L{0, 1}, 1), 0.0);
  EXPECT_THROW(ndcg_at_n(L{1}, 0), DataError);
}

TEST(Precision, Examples) {
  EXPECT_DOUBLE_EQ(precision_at_n(L{1, 0, 1}, 2, 1), 0.5);
  EXPECT_NEAR(precision_at_n(L{1}, 3, 1), 1.0 / 3.0, 1e-15);
  EXPECT_DOUBLE_EQ(precision_at_n(L{2, 1, 0}, 3, 2), 1.0 / 3.0);
}

TEST(AveragePrecision, Examples) {
  EXPECT_NEAR(average_precision(L{1, 0, 1}, 1), 5.0 / 6.0, 1e-15);
  EXPECT_EQ(average_precision(L{0, 0}, 1), 0.0);
  EXPECT_DOUBLE_EQ(average_precision(L{1, 1}, 1), 1.0);
}

// Every labelling of length <= 6 over {0,1,2}: the library agrees with the
// definitions, with the ideal DCG found by exhaustive search.
TEST(Metrics, ExhaustiveAgainstDefinitions) {
  for (int len = 1; len <= 6; ++len) {
    int combos = 1;
    for (int i = 0; i < len; ++i) combos *= 3;
    for (int code = 0; code < combos; ++code) {
      L labels(len);
      for (int i = 0, c = code; i < len; ++i, c /= 3) labels[i] = c % 3;
      for (int n = 1; n <= 7; ++n) {
        EXPECT_NEAR(ndcg_at_n(labels, n), oracle::def_ndcg(labels, n), 1e-12);
        for (int t : {1, 2}) {
          EXPECT_EQ(precision_at_n(labels, n, t), oracle::def_precision(labels, n, t));
        }
      }
      for (int t : {1, 2}) {
        EXPECT_NEAR(average_precision(labels, t), oracle::def_ap(labels, t), 1e-15);
      }
    }
  }
}

TEST(Metrics, RangeAndIdealOrder) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 500; ++trial) {
    L labels(1 + rng() % 30);
    for (int& l : labels) l = static_cast<int>(rng() % 3);
    L ideal = labels;
    std::sort(ideal.rbegin(), ideal.rend());
    const bool any = std::any_of(labels.begin(), labels.end(), [](int l) { return l > 0; });
    for (int n : {1, 3, 10, 40}) {
      const double v = ndcg_at_n(labels, n);
      EXPECT_GE(v, 0.0);
      EXPECT_LE(v, 1.0 + 1e-12);
      EXPECT_NEAR(ndcg_at_n(ideal, n), any ? 1.0 : 0.0, 1e-12);
      EXPECT_GE(precision_at_n(labels, n, 1), 0.0);
      EXPECT_LE(precision_at_n(labels, n, 1), 1.0);
    }
    EXPECT_GE(average_precision(labels, 1), 0.0);
    EXPECT_LE(average_precision(labels, 1), 1.0);
    EXPECT_DOUBLE_EQ(average_precision(ideal, 1), any ? 1.0 : 0.0);
  }
}

// Strictly increasing transforms of the scores leave every measure unchanged.
TEST(EvaluateQuery, InvariantUnderMonotoneTransform) {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> u(-3, 3);
  const MetricConfig cfg;
  for (int trial = 0; trial < 200; ++trial) {
    L labels(1 + rng() % 15);
    for (int& l : labels) l = static_cast<int>(rng() % 3);
    const auto group = group_of(labels);
    std::vector<double> s(labels.size()), t(labels.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      s[i] = u(rng);
      t[i] = std::exp(2.0 * s[i]) + 5.0;
    }
    const QueryMetrics a = evaluate_query(s, group, cfg);
    const QueryMetrics b = evaluate_query(t, group, cfg);
    EXPECT_EQ(a.ndcg_at, b.ndcg_at);
    EXPECT_EQ(a.precision_at, b.precision_at);
    EXPECT_EQ(a.average_precision, b.average_precision);
  }
}

TEST(EvaluateQuery, UsesStableDescendingOrder) {
  const auto group = group_of(L{0, 1, 2});
  const MetricConfig cfg{{1, 2, 3}, 1};
  const QueryMetrics m = evaluate_query(std::vector<double>{0.2, 0.2, 0.1}, group, cfg);
  EXPECT_EQ(m.precision_at[0], 0.0);  // tie keeps record 0 first
  EXPECT_DOUBLE_EQ(m.precision_at[1], 0.5);
  EXPECT_THROW(evaluate_query(std::vector<double>{}, std::span<const Record>{}, cfg),
               DataError);
  EXPECT_THROW(evaluate_query(std::vector<double>{1.0}, group, cfg), DataError);
}

TEST(MetricConfig, Validation) {
  EXPECT_NO_THROW(MetricConfig{}.validate(OrdinalScale(2)));
  EXPECT_THROW((MetricConfig{{2, 1}, 1}.validate()), DataError);
  EXPECT_THROW((MetricConfig{{0}, 1}.validate()), DataError);
  EXPECT_THROW((MetricConfig{{}, 1}.validate()), DataError);
  EXPECT_THROW((MetricConfig{{1}, 2}.validate(OrdinalScale(2))), DataError);
  EXPECT_NO_THROW((MetricConfig{{1}, 2}.validate(OrdinalScale(3))));
  EXPECT_THROW((MetricConfig{{1}, 0}.validate(OrdinalScale(3))), DataError);
}

TEST(MeanMetrics, Unweighted) {
  const std::vector<QueryMetrics> q = {{{1.0}, {0.5}, 0.25}, {{0.0}, {1.0}, 0.75}};
  const QueryMetrics m = mean_metrics(q);
  EXPECT_DOUBLE_EQ(m.ndcg_at[0], 0.5);
  EXPECT_DOUBLE_EQ(m.precision_at[0], 0.75);
  EXPECT_DOUBLE_EQ(m.average_precision, 0.5);
  EXPECT_THROW(mean_metrics({}), DataError);
}

}  // namespace
}  // namespace qirank
