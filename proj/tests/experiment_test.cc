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

#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "gtest/gtest.h"

namespace qirank {
namespace {

namespace fs = std::filesystem;

Record rec(std::string qid, int label, std::vector<double> f) {
  return Record{std::move(qid), label, std::move(f), ""};
}

TEST(MeanAndSampleStdev, Examples) {
  const std::vector<double> v = {0.40, 0.45, 0.50, 0.45, 0.425};
  const MeanStdev m = mean_and_sample_stdev(v);
  EXPECT_NEAR(m.mean, 0.445, 1e-15);
  EXPECT_NEAR(m.stdev, std::sqrt(0.0055 / 4.0), 1e-15);
  const std::vector<double> same(5, 0.3);
  EXPECT_EQ(mean_and_sample_stdev(same).stdev, 0.0);
  EXPECT_EQ(format_cell({0.4404, 0.0616}), "0.440 ± 0.062");
}

TEST(RunFold, AveragesOverTestQueries) {
  // Feature 0 tracks relevance in training.
  const Dataset train = validate_dataset({rec("t1", 1, {1.0}), rec("t1", 0, {-1.0}),
                                          rec("t2", 0, {-0.5}), rec("t2", 1, {0.4}),
                                          rec("t2", 1, {0.8}), rec("t2", 0, {0.3})});
  // Query a ranks its one relevant result first; query b has none.
  const Dataset test = validate_dataset({rec("a", 0, {0.1}), rec("a", 1, {2.0}),
                                         rec("b", 0, {0.5}), rec("b", 0, {0.7})},
                                        OrdinalScale(2));
  ExperimentConfig cfg;
  const FoldResult r = run_fold(1, train, test, cfg);
  EXPECT_EQ(r.kind, ModelKind::kBinary);
  ASSERT_EQ(r.per_query.size(), 2u);
  EXPECT_EQ(r.per_query[0].average_precision, 1.0);
  EXPECT_EQ(r.per_query[1].average_precision, 0.0);
  EXPECT_DOUBLE_EQ(r.average.average_precision, 0.5);
  EXPECT_EQ(r.test_scores.size(), 4u);
}

TEST(RunExperiment, RequiresFiveFolds) {
  const auto data = generate_synthetic(15, 4, 2, ModelKind::kBinary, 1).dataset;
  auto folds = make_folds(data);
  folds.erase(folds.begin() + 3, folds.end());
  try {
    run_experiment(folds, ExperimentConfig{});
    FAIL();
  } catch (const DataError& e) {
    EXPECT_NE(std::string(e.what()).find("expected 5 folds"), std::string::npos);
  }
}

fs::path make_tree(const std::string& name, ModelKind kind, std::uint64_t seed) {
  const fs::path root = fs::temp_directory_path() / ("qirank_exp_" + name);
  fs::remove_all(root);
  write_fold_tree(make_folds(generate_synthetic(40, 10, 3, kind, seed).dataset), root);
  return root;
}

TEST(RunExperiment, NeverReadsValidationFiles) {
  const fs::path root = make_tree("vali", ModelKind::kBinary, 5);
  std::set<std::string> seen;
  const RecordReader recording = [&](const fs::path& p) {
    seen.insert(p.filename().string());
    return parse_file(p);
  };
  ExperimentConfig cfg;
  cfg.dataset_root = root;
  run_experiment(cfg, recording);
  EXPECT_EQ(seen, (std::set<std::string>{"train.txt", "test.txt"}));
}

TEST(RunExperiment, FileTreeWithScoreFiles) {
  const fs::path root = make_tree("tree", ModelKind::kTrinaryCascade, 6);
  ExperimentConfig cfg;
  cfg.dataset_root = root;
  cfg.score_dir = root / "scores";
  fs::create_directories(*cfg.score_dir);
  const AggregateReport rep = run_experiment(cfg);
  EXPECT_EQ(rep.kind, ModelKind::kTrinaryCascade);
  ASSERT_EQ(rep.folds.size(), 5u);
  for (const FoldResult& f : rep.folds) {
    const auto scores = read_scores(root / "scores" / ("Fold" + std::to_string(f.fold_id) + ".scores"));
    EXPECT_EQ(scores, f.test_scores);
  }
}

TEST(RunExperiment, DeterministicAndAggregatesFoldAverages) {
  const auto data = generate_synthetic(50, 10, 3, ModelKind::kBinary, 9).dataset;
  const auto folds = make_folds(data);
  ExperimentConfig cfg;
  cfg.collection = Collection::kTd2003;
  const AggregateReport a = run_experiment(folds, cfg);
  const AggregateReport b = run_experiment(folds, cfg);
  EXPECT_EQ(emit_report(a, ReportFormat::kCsv), emit_report(b, ReportFormat::kCsv));
  EXPECT_EQ(emit_report(a, ReportFormat::kMarkdown), emit_report(b, ReportFormat::kMarkdown));

  for (std::size_t c = 0; c < cfg.metric_config.cutoffs.size(); ++c) {
    double sum = 0.0;
    for (const FoldResult& f : a.folds) {
      double q = 0.0;
      for (const QueryMetrics& m : f.per_query) q += m.ndcg_at[c];
      sum += q / static_cast<double>(f.per_query.size());
    }
    EXPECT_NEAR(a.ndcg[c].mean, sum / 5.0, 1e-12);
  }
  double ss = 0.0;
  for (const FoldResult& f : a.folds) {
    ss += std::pow(f.average.average_precision - a.map.mean, 2);
  }
  EXPECT_NEAR(a.map.stdev, std::sqrt(ss / 4.0), 1e-12);
}

TEST(EmitReport, CsvLayoutAndErrors) {
  const auto folds = make_folds(generate_synthetic(30, 8, 2, ModelKind::kBinary, 3).dataset);
  ExperimentConfig cfg;
  cfg.metric_config.cutoffs = {1, 2};
  cfg.collection = Collection::kOhsumed;
  const AggregateReport rep = run_experiment(folds, cfg);
  const std::string csv = emit_report(rep, ReportFormat::kCsv);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "method,NDCG@1,NDCG@2,P@1,P@2,MAP");
  EXPECT_NE(csv.find("\nRankBoost,,0.483 ± 0.079,"), std::string::npos) << csv;
  const std::string md = emit_report(rep, ReportFormat::kMarkdown);
  EXPECT_NE(md.find("| Fold |"), std::string::npos);

  EXPECT_THROW(emit_report(AggregateReport{}, ReportFormat::kCsv), DataError);
  EXPECT_THROW(parse_report_format("xml"), DataError);
  EXPECT_EQ(parse_report_format("md"), ReportFormat::kMarkdown);
}

// The compiled-in comparison tables agree cell by cell with an independent
// transcription of the published tables.
TEST(Baselines, MatchPublishedTables) {
  std::ifstream in(fs::path(QIRANK_FIXTURE_DIR) / "published_tables.csv");
  ASSERT_TRUE(in);
  std::string line;
  std::getline(in, line);
  int checked = 0;
  while (std::getline(in, line)) {
    std::vector<std::string> f;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) f.push_back(cell);
    ASSERT_EQ(f.size(), 5u) << line;
    const Collection c = *parse_collection(f[0]);
    const PublishedRow* row = nullptr;
    if (f[2] == "This") {
      row = &published_result(c);
    } else {
      for (const PublishedRow& r : baseline_rows(c)) {
        if (r.method == f[2]) row = &r;
      }
    }
    ASSERT_NE(row, nullptr) << f[2];
    MeanStdev v;
    if (f[3] == "MAP") {
      v = row->map;
    } else {
      const bool ndcg = f[3].rfind("NDCG@", 0) == 0;
      const int cut = std::stoi(f[3].substr(f[3].find('@') + 1));
      const std::size_t i = static_cast<std::size_t>(cut / 2 - 1);
      v = ndcg ? row->ndcg[i] : row->precision[i];
    }
    EXPECT_EQ(format_cell(v), f[4]) << line;
    ++checked;
  }
  EXPECT_EQ(checked, 231);
}

}  // namespace
}  // namespace qirank
