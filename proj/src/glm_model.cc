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

#include "qirank/glm_model.h"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qirank {

namespace {

using Term = LogitTerm;
using B = LogitTerm::Benchmark;

double benchmark_value(const Intercept& intercept, B which) {
  if (which == B::kSingle) return std::get<double>(intercept);
  const auto& pair = std::get<ThresholdPair>(intercept);
  return which == B::kHigh ? pair.high : pair.low;
}

TrinaryProbs exp_each(double l0, double l1, double l2) {
  return {std::exp(l0), std::exp(l1), std::exp(l2)};
}

}  // namespace

std::string_view to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::kBinary: return "binary";
    case ModelKind::kTrinaryCascade: return "trinary";
    case ModelKind::kTrinaryCascadeAlt: return "trinary-alt";
    case ModelKind::kNoInterceptBaseline: return "baseline";
  }
  return "?";
}

ModelKind parse_model_kind(std::string_view name) {
  for (ModelKind k : {ModelKind::kBinary, ModelKind::kTrinaryCascade,
                      ModelKind::kTrinaryCascadeAlt,
                      ModelKind::kNoInterceptBaseline}) {
    if (to_string(k) == name) return k;
  }
  throw DataError("unknown model kind '" + std::string(name) + "'");
}

int required_levels(ModelKind kind) {
  return uses_threshold_pair(kind) ? 3 : 2;
}

bool uses_threshold_pair(ModelKind kind) {
  return kind == ModelKind::kTrinaryCascade ||
         kind == ModelKind::kTrinaryCascadeAlt;
}

void check_compatible(ModelKind kind, const OrdinalScale& scale) {
  if (scale.levels() != required_levels(kind)) {
    throw DataError("model kind '" + std::string(to_string(kind)) + "' needs " +
                    std::to_string(required_levels(kind)) +
                    " label levels, data has " + std::to_string(scale.levels()));
  }
}

double sigmoid(double x) {
  if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

double log_sigmoid(double x) {
  if (x >= 0.0) return -std::log1p(std::exp(-x));
  return x - std::log1p(std::exp(x));
}

double score(std::span<const double> w, std::span<const double> features) {
  if (w.size() != features.size()) {
    throw DataError("weight length " + std::to_string(w.size()) +
                    " does not match feature length " +
                    std::to_string(features.size()));
  }
  double s = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * features[i];
  return s;
}

BinaryProbs prob_binary(std::span<const double> w, double theta,
                        std::span<const double> features) {
  const double s = score(w, features);
  return {sigmoid(theta - s), sigmoid(s - theta)};
}

TrinaryProbs prob_trinary(std::span<const double> w, double theta_high,
                          double theta_low, std::span<const double> features) {
  const double s = score(w, features);
  const double below_high = log_sigmoid(theta_high - s);
  return exp_each(below_high + log_sigmoid(theta_low - s),
                  below_high + log_sigmoid(s - theta_low),
                  log_sigmoid(s - theta_high));
}

TrinaryProbs prob_trinary_alt(std::span<const double> w, double theta_high,
                              double theta_low, std::span<const double> features) {
  const double s = score(w, features);
  const double above_low = log_sigmoid(s - theta_low);
  return exp_each(log_sigmoid(theta_low - s),
                  above_low + log_sigmoid(theta_high - s),
                  above_low + log_sigmoid(s - theta_high));
}

LabelTerms label_terms(ModelKind kind, int label) {
  switch (kind) {
    case ModelKind::kBinary:
    case ModelKind::kNoInterceptBaseline:
      if (label == 0) return {{Term{B::kSingle, -1.0}}, 1};
      if (label == 1) return {{Term{B::kSingle, +1.0}}, 1};
      break;
    case ModelKind::kTrinaryCascade:
      if (label == 0) return {{Term{B::kHigh, -1.0}, Term{B::kLow, -1.0}}, 2};
      if (label == 1) return {{Term{B::kHigh, -1.0}, Term{B::kLow, +1.0}}, 2};
      if (label == 2) return {{Term{B::kHigh, +1.0}}, 1};
      break;
    case ModelKind::kTrinaryCascadeAlt:
      if (label == 0) return {{Term{B::kLow, -1.0}}, 1};
      if (label == 1) return {{Term{B::kLow, +1.0}, Term{B::kHigh, -1.0}}, 2};
      if (label == 2) return {{Term{B::kLow, +1.0}, Term{B::kHigh, +1.0}}, 2};
      break;
  }
  throw DataError("label " + std::to_string(label) + " invalid for model kind '" +
                  std::string(to_string(kind)) + "'");
}

double log_prob(ModelKind kind, double s, const Intercept& intercept, int label) {
  double lp = 0.0;
  for (const Term& t : label_terms(kind, label)) {
    lp += log_sigmoid(t.sign * (s - benchmark_value(intercept, t.benchmark)));
  }
  return lp;
}

std::vector<std::size_t> rank_by_scores(std::span<const double> scores) {
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return scores[a] > scores[b];
  });
  return order;
}

std::vector<std::size_t> rank_query(const ModelParams& params,
                                    std::span<const Record> group) {
  std::vector<double> scores;
  scores.reserve(group.size());
  for (const Record& r : group) scores.push_back(score(params.w, r.features));
  return rank_by_scores(scores);
}

}  // namespace qirank
