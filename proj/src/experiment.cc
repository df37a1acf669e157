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

#include "qirank/experiment.h"

#include <algorithm>
#include <cmath>

namespace qirank {

namespace {

ModelKind resolve_kind(const ExperimentConfig& config, const OrdinalScale& scale) {
  if (config.model_kind) return *config.model_kind;
  return scale.levels() == 3 ? ModelKind::kTrinaryCascade : ModelKind::kBinary;
}

std::optional<OrdinalScale> declared_scale(const ExperimentConfig& config) {
  if (!config.model_kind) return std::nullopt;
  return OrdinalScale(required_levels(*config.model_kind));
}

[[noreturn]] void rethrow_for_fold(int fold_id, const std::exception& e) {
  throw DataError("fold " + std::to_string(fold_id) + ": " + e.what());
}

}  // namespace

ReportFormat parse_report_format(std::string_view tag) {
  if (tag == "csv") return ReportFormat::kCsv;
  if (tag == "markdown" || tag == "md") return ReportFormat::kMarkdown;
  throw DataError("unknown report format '" + std::string(tag) + "'");
}

Dataset normalize_per_query(const Dataset& data) {
  std::vector<Record> out(data.records());
  const std::size_t k = data.k();
  for (const QueryGroup& g : data.groups()) {
    for (std::size_t f = 0; f < k; ++f) {
      double lo = out[g.begin].features[f];
      double hi = lo;
      for (std::size_t i = g.begin; i < g.end; ++i) {
        lo = std::min(lo, out[i].features[f]);
        hi = std::max(hi, out[i].features[f]);
      }
      const double range = hi - lo;
      for (std::size_t i = g.begin; i < g.end; ++i) {
        double& v = out[i].features[f];
        v = range > 0.0 ? (v - lo) / range : 0.0;
      }
    }
  }
  return validate_dataset(std::move(out), data.scale());
}

FoldResult run_fold(int fold_id, const Dataset& train_in, const Dataset& test_in,
                    const ExperimentConfig& config) {
  config.metric_config.validate(train_in.scale());
  const ModelKind kind = resolve_kind(config, train_in.scale());
  if (test_in.k() != train_in.k()) {
    throw DataError("test data has " + std::to_string(test_in.k()) +
                    " features, training data has " + std::to_string(train_in.k()));
  }

  std::optional<Dataset> train_norm;
  std::optional<Dataset> test_norm;
  if (config.normalize_features) {
    train_norm = normalize_per_query(train_in);
    test_norm = normalize_per_query(test_in);
  }
  const Dataset& train = train_norm ? *train_norm : train_in;
  const Dataset& test = test_norm ? *test_norm : test_in;

  FitResult fitted = fit(train, kind, config.train_config);

  FoldResult result;
  result.fold_id = fold_id;
  result.kind = kind;
  result.converged = fitted.converged;
  result.iterations = fitted.iterations;
  result.final_nll = fitted.final_nll;
  if (!fitted.converged) {
    result.warning = "fit did not converge after " +
                     std::to_string(fitted.iterations) + " iterations";
  }
  result.params = std::move(fitted.params);

  result.test_scores.reserve(test.size());
  for (const Record& r : test.records()) {
    result.test_scores.push_back(score(result.params.w, r.features));
  }
  result.per_query = evaluate_dataset(result.test_scores, test, config.metric_config);
  result.average = mean_metrics(result.per_query);
  return result;
}

FoldResult run_fold(const FoldSpec& fold, const ExperimentConfig& config,
                    const RecordReader& reader) {
  Dataset train = validate_dataset(reader(fold.train_path), declared_scale(config));
  Dataset test = validate_dataset(reader(fold.test_path), train.scale());
  FoldResult result = run_fold(fold.fold_id, train, test, config);
  if (config.score_dir) {
    std::filesystem::create_directories(*config.score_dir);
    write_scores(test.records(), result.test_scores,
                 *config.score_dir / ("Fold" + std::to_string(fold.fold_id) + ".scores"));
  }
  return result;
}

MeanStdev mean_and_sample_stdev(std::span<const double> values) {
  if (values.empty()) throw DataError("no values to aggregate");
  double sum = 0.0;
  for (double v : values) sum += v;
  const double mean = sum / static_cast<double>(values.size());
  if (values.size() == 1) return {mean, 0.0};
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return {mean, std::sqrt(ss / static_cast<double>(values.size() - 1))};
}

AggregateReport aggregate(std::vector<FoldResult> folds, const ExperimentConfig& config) {
  if (folds.empty()) throw DataError("no folds to aggregate");
  AggregateReport report;
  report.kind = folds.front().kind;
  report.metric_config = config.metric_config;
  report.collection = config.collection;
  if (config.collection) report.baselines = baseline_rows(*config.collection);

  const std::size_t ncut = config.metric_config.cutoffs.size();
  std::vector<double> column(folds.size());
  for (std::size_t c = 0; c < ncut; ++c) {
    for (std::size_t f = 0; f < folds.size(); ++f) column[f] = folds[f].average.ndcg_at[c];
    report.ndcg.push_back(mean_and_sample_stdev(column));
    for (std::size_t f = 0; f < folds.size(); ++f) {
      column[f] = folds[f].average.precision_at[c];
    }
    report.precision.push_back(mean_and_sample_stdev(column));
  }
  for (std::size_t f = 0; f < folds.size(); ++f) {
    column[f] = folds[f].average.average_precision;
  }
  report.map = mean_and_sample_stdev(column);
  report.folds = std::move(folds);
  return report;
}

AggregateReport run_experiment(const ExperimentConfig& config,
                               const RecordReader& reader) {
  const std::vector<FoldSpec> folds =
      config.folds.empty() ? locate_folds(config.dataset_root) : config.folds;
  if (folds.size() != 5) {
    throw DataError("expected 5 folds, got " + std::to_string(folds.size()));
  }
  std::vector<FoldResult> results;
  for (const FoldSpec& fold : folds) {
    try {
      results.push_back(run_fold(fold, config, reader));
    } catch (const std::exception& e) {
      rethrow_for_fold(fold.fold_id, e);
    }
  }
  return aggregate(std::move(results), config);
}

AggregateReport run_experiment(const std::vector<SyntheticFold>& folds,
                               const ExperimentConfig& config) {
  if (folds.size() != 5) {
    throw DataError("expected 5 folds, got " + std::to_string(folds.size()));
  }
  std::vector<FoldResult> results;
  for (std::size_t f = 0; f < folds.size(); ++f) {
    const int id = static_cast<int>(f) + 1;
    try {
      results.push_back(run_fold(id, folds[f].train, folds[f].test, config));
    } catch (const std::exception& e) {
      rethrow_for_fold(id, e);
    }
  }
  return aggregate(std::move(results), config);
}

}  // namespace qirank
