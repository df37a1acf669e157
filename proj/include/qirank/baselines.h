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

// Published LETOR 2.0 five-fold results (mean and stdev over folds) for the
// query-intercept logit model and six competitor rankers. Competitors are
// reference numbers only; they are not re-implemented here.

#ifndef QIRANK_BASELINES_H_
#define QIRANK_BASELINES_H_

#include <array>
#include <optional>
#include <span>
#include <string_view>

namespace qirank {

enum class Collection { kOhsumed, kTd2003, kTd2004 };

std::string_view to_string(Collection c);
// Case-insensitive "ohsumed", "td2003", "td2004".
std::optional<Collection> parse_collection(std::string_view name);

struct MeanStdev {
  double mean = 0.0;
  double stdev = 0.0;
};

inline constexpr std::array<int, 5> kPublishedCutoffs = {2, 4, 6, 8, 10};

struct PublishedRow {
  std::string_view method;
  std::array<MeanStdev, 5> ndcg;       // at kPublishedCutoffs
  std::array<MeanStdev, 5> precision;  // at kPublishedCutoffs
  MeanStdev map;
};

// The query-intercept model's published row for `c`.
const PublishedRow& published_result(Collection c);
// RankBoost, RankSVM, FRank, ListNet, AdaRank.MAP, AdaRank.NDCG, in that order.
std::span<const PublishedRow> baseline_rows(Collection c);

}  // namespace qirank

#endif  // QIRANK_BASELINES_H_
