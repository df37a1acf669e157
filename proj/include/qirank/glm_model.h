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

// Logit models of a judge's label given a result's linear score s = w.phi and
// the query's benchmark(s).
//
//   Binary:             P(1) = sigma(s - theta)
//   TrinaryCascade:     compare against the high benchmark first.
//                         P(2) = sigma(s - H)
//                         P(1) = sigma(H - s) sigma(s - L)
//                         P(0) = sigma(H - s) sigma(L - s)
//   TrinaryCascadeAlt:  compare against the low benchmark first.
//                         P(0) = sigma(L - s)
//                         P(1) = sigma(s - L) sigma(H - s)
//                         P(2) = sigma(s - L) sigma(s - H)
//   NoInterceptBaseline: Binary with one intercept shared by every query.
//
// Within a query every model is increasing in s, so ranking needs only w.

#ifndef QIRANK_GLM_MODEL_H_
#define QIRANK_GLM_MODEL_H_

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qirank/core_types.h"

namespace qirank {

enum class ModelKind { kBinary, kTrinaryCascade, kTrinaryCascadeAlt, kNoInterceptBaseline };

std::string_view to_string(ModelKind kind);
// Accepts "binary", "trinary", "trinary-alt", "baseline".
ModelKind parse_model_kind(std::string_view name);

int required_levels(ModelKind kind);
bool uses_threshold_pair(ModelKind kind);
// Throws DataError if the kind cannot model labels on `scale`.
void check_compatible(ModelKind kind, const OrdinalScale& scale);

// Stable logistic 1/(1+e^-x); only ever exponentiates a non-positive number.
double sigmoid(double x);
// log(sigmoid(x)) without forming sigmoid(x).
double log_sigmoid(double x);

double score(std::span<const double> w, std::span<const double> features);

struct BinaryProbs {
  double p0;
  double p1;
};
BinaryProbs prob_binary(std::span<const double> w, double theta,
                        std::span<const double> features);

using TrinaryProbs = std::array<double, 3>;  // indexed by label

TrinaryProbs prob_trinary(std::span<const double> w, double theta_high,
                          double theta_low, std::span<const double> features);
TrinaryProbs prob_trinary_alt(std::span<const double> w, double theta_high,
                              double theta_low, std::span<const double> features);

// log P(label) as a sum of at most two log-sigmoid terms
//   sum_t log sigmoid(sign_t * (s - benchmark_t)).
// Each term's derivative is sign_t * sigmoid(-sign_t * (s - benchmark_t))
// with respect to s and the negation of that with respect to benchmark_t.
struct LogitTerm {
  enum class Benchmark { kSingle, kHigh, kLow };
  Benchmark benchmark;
  double sign;  // +1 or -1
};

struct LabelTerms {
  std::array<LogitTerm, 2> terms;
  std::size_t count;

  auto begin() const { return terms.begin(); }
  auto end() const { return terms.begin() + count; }
};

LabelTerms label_terms(ModelKind kind, int label);

// log P(label | s, intercept). `intercept` must hold a double for the binary
// kinds and a ThresholdPair for the trinary kinds.
double log_prob(ModelKind kind, double s, const Intercept& intercept, int label);

// Indices of `scores` by descending value; equal scores keep input order.
std::vector<std::size_t> rank_by_scores(std::span<const double> scores);

// Ranking of one query's records by w.phi alone. Intercepts are never read.
std::vector<std::size_t> rank_query(const ModelParams& params,
                                    std::span<const Record> group);

}  // namespace qirank

#endif  // QIRANK_GLM_MODEL_H_
