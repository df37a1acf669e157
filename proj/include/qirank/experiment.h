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

// Five-fold protocol: fit on each fold's training file, score its test file
// with w alone, average metrics over test queries, then report mean and
// sample stdev of the fold averages. Validation files are located but never
// read.

#ifndef QIRANK_EXPERIMENT_H_
#define QIRANK_EXPERIMENT_H_

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qirank/baselines.h"
#include "qirank/core_types.h"
#include "qirank/glm_model.h"
#include "qirank/ir_metrics.h"
#include "qirank/letor_io.h"
#include "qirank/mle_trainer.h"
#include "qirank/synthetic.h"

namespace qirank {

struct ExperimentConfig {
  std::filesystem::path dataset_root;
  // Overrides the FoldN directory convention when non-empty.
  std::vector<FoldSpec> folds;
  // Unset: binary for two-level data, trinary cascade for three-level data.
  std::optional<ModelKind> model_kind;
  TrainConfig train_config;
  MetricConfig metric_config;
  // Per-query min-max scaling of every feature, applied to each split.
  bool normalize_features = false;
  // Selects the published comparison rows attached to the report.
  std::optional<Collection> collection;
  // When set, FoldN.scores files are written here.
  std::optional<std::filesystem::path> score_dir;
};

// How fold files are loaded; swap in to observe or fake file access.
using RecordReader =
    std::function<std::vector<Record>(const std::filesystem::path&)>;

struct FoldResult {
  int fold_id = 0;
  ModelKind kind = ModelKind::kBinary;
  std::vector<QueryMetrics> per_query;
  QueryMetrics average;
  std::vector<double> test_scores;  // parallel to the test records
  ModelParams params;
  bool converged = false;
  int iterations = 0;
  double final_nll = 0.0;
  std::string warning;  // non-empty when the fit did not converge
};

struct AggregateReport {
  ModelKind kind = ModelKind::kBinary;
  MetricConfig metric_config;
  std::vector<FoldResult> folds;
  std::vector<MeanStdev> ndcg;       // parallel to metric_config.cutoffs
  std::vector<MeanStdev> precision;  // parallel to metric_config.cutoffs
  MeanStdev map;
  std::optional<Collection> collection;
  std::span<const PublishedRow> baselines;
};

enum class ReportFormat { kCsv, kMarkdown };
ReportFormat parse_report_format(std::string_view tag);

// Per-query min-max scaling; constant features map to 0.
Dataset normalize_per_query(const Dataset& data);

// Fit on `train`, evaluate on `test`. Never aborts on non-convergence.
FoldResult run_fold(int fold_id, const Dataset& train, const Dataset& test,
                    const ExperimentConfig& config);
// Loads only the train and test files of `fold` through `reader`.
FoldResult run_fold(const FoldSpec& fold, const ExperimentConfig& config,
                    const RecordReader& reader = parse_file);

// Mean and sample (n-1) stdev of the fold averages.
AggregateReport aggregate(std::vector<FoldResult> folds, const ExperimentConfig& config);

MeanStdev mean_and_sample_stdev(std::span<const double> values);

// Requires exactly five folds; a failing fold aborts with its id.
AggregateReport run_experiment(const ExperimentConfig& config,
                               const RecordReader& reader = parse_file);
AggregateReport run_experiment(const std::vector<SyntheticFold>& folds,
                               const ExperimentConfig& config);

// "0.440 ± 0.062"
std::string format_cell(const MeanStdev& cell);

// CSV: one row per method (this model first, then the published rows), a
// column per metric and cutoff. Markdown: NDCG, precision and MAP tables with
// the best mean in each column in bold, then per-fold diagnostics.
std::string emit_report(const AggregateReport& report, ReportFormat format);

}  // namespace qirank

#endif  // QIRANK_EXPERIMENT_H_
