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

// qirank: train, score and evaluate query-intercept logit rankers on LETOR
// files, and run the five-fold protocol.
//
//   qirank train --data train.txt --out model.json
//   qirank score --model model.json --data test.txt --out test.scores
//   qirank eval --scores test.scores --data test.txt
//   qirank experiment --root OHSUMED/ --dataset ohsumed --format markdown
//   qirank synth --out synth/ --queries 200 --results 50 --features 10

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qirank/experiment.h"
#include "qirank/model_io.h"

namespace {

using namespace qirank;

struct CommonFlags {
  std::string model_kind;
  double l2 = TrainConfig{}.l2_penalty;
  double tol = TrainConfig{}.grad_tolerance;
  int max_iter = TrainConfig{}.max_iterations;
  std::vector<int> cutoffs = MetricConfig{}.cutoffs;
  int relevance_threshold = MetricConfig{}.relevance_threshold;
  bool normalize = false;
  std::string format = "csv";
  std::string out;

  TrainConfig train_config() const {
    TrainConfig c;
    c.l2_penalty = l2;
    c.grad_tolerance = tol;
    c.max_iterations = max_iter;
    return c;
  }
  MetricConfig metric_config() const { return {cutoffs, relevance_threshold}; }
  std::optional<ModelKind> kind() const {
    if (model_kind.empty()) return std::nullopt;
    return parse_model_kind(model_kind);
  }
};

void add_train_flags(CLI::App* app, CommonFlags& f) {
  app->add_option("--model-kind", f.model_kind,
                  "binary | trinary | trinary-alt | baseline (default: from labels)");
  app->add_option("--l2", f.l2, "Ridge penalty on all parameters")->capture_default_str();
  app->add_option("--tol", f.tol, "Gradient infinity-norm tolerance")->capture_default_str();
  app->add_option("--max-iter", f.max_iter, "Iteration cap")->capture_default_str();
}

void add_metric_flags(CLI::App* app, CommonFlags& f) {
  app->add_option("--cutoffs", f.cutoffs, "Comma-separated cutoffs")
      ->delimiter(',')
      ->capture_default_str();
  app->add_option("--relevance-threshold", f.relevance_threshold,
                  "Smallest label counted as relevant for P@n and MAP")
      ->capture_default_str();
}

void add_normalize_flag(CLI::App* app, CommonFlags& f) {
  app->add_flag("--normalize", f.normalize, "Per-query min-max feature scaling");
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot write " + path);
  out << text;
}

Dataset load_dataset(const std::string& path, std::optional<OrdinalScale> scale,
                     bool normalize) {
  Dataset ds = validate_dataset(parse_file(path), scale);
  return normalize ? normalize_per_query(ds) : ds;
}

std::string metrics_table(const QueryMetrics& m, const MetricConfig& config,
                          std::size_t queries, ReportFormat format) {
  std::vector<std::string> names;
  std::vector<double> values;
  for (std::size_t c = 0; c < config.cutoffs.size(); ++c) {
    names.push_back("NDCG@" + std::to_string(config.cutoffs[c]));
    values.push_back(m.ndcg_at[c]);
  }
  for (std::size_t c = 0; c < config.cutoffs.size(); ++c) {
    names.push_back("P@" + std::to_string(config.cutoffs[c]));
    values.push_back(m.precision_at[c]);
  }
  names.push_back("MAP");
  values.push_back(m.average_precision);

  std::ostringstream out;
  if (format == ReportFormat::kCsv) {
    out << "metric,value\n";
    for (std::size_t i = 0; i < names.size(); ++i) {
      out << names[i] << ',' << format_double(values[i]) << '\n';
    }
    out << "queries," << queries << '\n';
  } else {
    out << "| Metric | Value |\n|---|---|\n";
    for (std::size_t i = 0; i < names.size(); ++i) {
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%.3f", values[i]);
      out << "| " << names[i] << " | " << buf << " |\n";
    }
    out << "\n" << queries << " queries\n";
  }
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Query-intercept logit ranking on LETOR data"};
  app.require_subcommand(1);

  CommonFlags flags;
  std::string data_path;
  std::string model_path;
  std::string scores_path;
  std::string root;
  std::string dataset_name;
  std::string score_dir;
  int queries = 200;
  int results = 50;
  int features = 10;
  std::uint64_t seed = 1;
  double intercept_range = SyntheticSpec{}.intercept_range;
  double query_shift = SyntheticSpec{}.query_shift;

  auto* train = app.add_subcommand("train", "Fit a model on one LETOR file");
  train->add_option("--data", data_path, "Training file")->required();
  train->add_option("--out", flags.out, "Model file to write")->required();
  add_train_flags(train, flags);
  add_normalize_flag(train, flags);

  auto* score_cmd = app.add_subcommand("score", "Score a LETOR file with a model");
  score_cmd->add_option("--model", model_path, "Model file")->required();
  score_cmd->add_option("--data", data_path, "LETOR file to score")->required();
  score_cmd->add_option("--out", flags.out, "Score file to write")->required();
  add_normalize_flag(score_cmd, flags);

  auto* eval = app.add_subcommand("eval", "Compute NDCG@n, P@n and MAP");
  eval->add_option("--data", data_path, "Labelled LETOR file")->required();
  auto* from_scores = eval->add_option("--scores", scores_path, "Score file");
  auto* from_model = eval->add_option("--model", model_path, "Model file");
  from_scores->excludes(from_model);
  add_metric_flags(eval, flags);
  add_normalize_flag(eval, flags);
  eval->add_option("--format", flags.format, "csv | markdown")->capture_default_str();
  eval->add_option("--out", flags.out, "Output file (default stdout)");

  auto* experiment = app.add_subcommand("experiment", "Five-fold train/test protocol");
  experiment->add_option("--root", root, "Directory holding Fold1..Fold5")->required();
  experiment->add_option("--dataset", dataset_name,
                         "ohsumed | td2003 | td2004: attach published comparison rows");
  experiment->add_option("--score-dir", score_dir, "Write FoldN.scores files here");
  add_train_flags(experiment, flags);
  add_metric_flags(experiment, flags);
  add_normalize_flag(experiment, flags);
  experiment->add_option("--format", flags.format, "csv | markdown")->capture_default_str();
  experiment->add_option("--out", flags.out, "Report file (default stdout)");

  auto* synth = app.add_subcommand("synth", "Write a synthetic five-fold tree");
  synth->add_option("--out", flags.out, "Root directory to create")->required();
  synth->add_option("--queries", queries)->capture_default_str();
  synth->add_option("--results", results, "Results per query")->capture_default_str();
  synth->add_option("--features", features)->capture_default_str();
  synth->add_option("--model-kind", flags.model_kind, "Generating model (default binary)");
  synth->add_option("--seed", seed)->capture_default_str();
  synth->add_option("--intercept-range", intercept_range,
                    "Intercepts drawn uniform in [-r, r]")
      ->capture_default_str();
  synth->add_option("--query-shift", query_shift,
                    "Shift each query's features by this times its intercept")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (train->parsed()) {
      const auto kind_opt = flags.kind();
      const Dataset ds = load_dataset(
          data_path,
          kind_opt ? std::optional(OrdinalScale(required_levels(*kind_opt))) : std::nullopt,
          flags.normalize);
      const ModelKind kind = kind_opt.value_or(
          ds.scale().levels() == 3 ? ModelKind::kTrinaryCascade : ModelKind::kBinary);
      const TrainConfig config = flags.train_config();
      const FitResult fitted = fit(ds, kind, config);
      save_model({kind, fitted.params, config}, flags.out);
      std::cerr << "trained " << to_string(kind) << " model on " << ds.size()
                << " records, " << ds.num_queries() << " queries: nll "
                << format_double(fitted.final_nll) << " after " << fitted.iterations
                << " iterations" << (fitted.converged ? "" : " (not converged)") << '\n';
    } else if (score_cmd->parsed()) {
      const SavedModel model = load_model(model_path);
      const Dataset ds = load_dataset(data_path, std::nullopt, flags.normalize);
      std::vector<double> scores;
      for (const Record& r : ds.records()) scores.push_back(score(model.params.w, r.features));
      write_scores(ds.records(), scores, flags.out);
    } else if (eval->parsed()) {
      const MetricConfig mc = flags.metric_config();
      const Dataset ds = load_dataset(data_path, std::nullopt, flags.normalize);
      mc.validate(ds.scale());
      std::vector<double> scores;
      if (!scores_path.empty()) {
        scores = read_scores(scores_path);
      } else if (!model_path.empty()) {
        const SavedModel model = load_model(model_path);
        for (const Record& r : ds.records()) {
          scores.push_back(score(model.params.w, r.features));
        }
      } else {
        throw DataError("eval needs --scores or --model");
      }
      const auto per_query = evaluate_dataset(scores, ds, mc);
      write_output(flags.out, metrics_table(mean_metrics(per_query), mc, per_query.size(),
                                            parse_report_format(flags.format)));
    } else if (experiment->parsed()) {
      ExperimentConfig config;
      config.dataset_root = root;
      config.model_kind = flags.kind();
      config.train_config = flags.train_config();
      config.metric_config = flags.metric_config();
      config.normalize_features = flags.normalize;
      if (!dataset_name.empty()) {
        config.collection = parse_collection(dataset_name);
        if (!config.collection) throw DataError("unknown dataset '" + dataset_name + "'");
      }
      if (!score_dir.empty()) config.score_dir = score_dir;
      const ReportFormat format = parse_report_format(flags.format);
      const AggregateReport report = run_experiment(config);
      for (const FoldResult& f : report.folds) {
        if (!f.warning.empty()) {
          std::cerr << "warning: fold " << f.fold_id << ": " << f.warning << '\n';
        }
      }
      write_output(flags.out, emit_report(report, format));
    } else if (synth->parsed()) {
      const ModelKind kind =
          flags.model_kind.empty() ? ModelKind::kBinary : parse_model_kind(flags.model_kind);
      SyntheticSpec spec;
      spec.intercept_range = intercept_range;
      spec.query_shift = query_shift;
      const SyntheticData data =
          generate_synthetic(queries, results, features, kind, seed, spec);
      write_fold_tree(make_folds(data.dataset), flags.out);
      save_model({kind, data.truth, {}}, std::filesystem::path(flags.out) / "truth.json");
    }
  } catch (const std::exception& e) {
    std::cerr << "qirank: error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
