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

#include "qirank/synthetic.h"

#include <cmath>
#include <fstream>
#include <random>
#include <string>

#include "qirank/letor_io.h"

namespace qirank {

namespace {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  // One engine draw per call, so the stream layout does not depend on ranges.
  double uniform(double lo, double hi) {
    const double u = unit_(engine_);
    return lo + (hi - lo) * u;
  }
  double unit() { return unit_(engine_); }

 private:
  std::mt19937_64 engine_;
  std::uniform_real_distribution<double> unit_{0.0, 1.0};
};

int draw_label(ModelKind kind, double s, const Intercept& ic, double u) {
  const int levels = required_levels(kind);
  double cumulative = 0.0;
  for (int label = 0; label < levels - 1; ++label) {
    cumulative += std::exp(log_prob(kind, s, ic, label));
    if (u < cumulative) return label;
  }
  return levels - 1;
}

}  // namespace

SyntheticData generate_synthetic(int n_queries, int results_per_query, int k,
                                 ModelKind kind, std::uint64_t seed,
                                 const SyntheticSpec& spec) {
  if (n_queries <= 0 || results_per_query <= 0 || k <= 0) {
    throw DataError("synthetic sizes must be positive");
  }
  Sampler rng(seed);
  ModelParams truth;
  truth.w.resize(k);
  for (double& v : truth.w) v = rng.uniform(-spec.weight_range, spec.weight_range);

  std::vector<double> shift_dir;
  if (spec.query_shift != 0.0) {
    std::normal_distribution<double> gauss;
    std::mt19937_64 dir_engine(seed ^ 0x9e3779b97f4a7c15ULL);
    double norm = 0.0;
    shift_dir.resize(k);
    for (double& v : shift_dir) {
      v = gauss(dir_engine);
      norm += v * v;
    }
    norm = std::sqrt(norm);
    for (double& v : shift_dir) v /= norm;
  }

  auto draw_intercept = [&]() -> Intercept {
    const double base = rng.uniform(-spec.intercept_range, spec.intercept_range);
    if (!uses_threshold_pair(kind)) return base;
    const double gap = rng.uniform(spec.gap_min, spec.gap_max);
    return ThresholdPair{base + gap, base};
  };

  if (kind == ModelKind::kNoInterceptBaseline) {
    truth.intercepts.emplace(kSharedInterceptKey, draw_intercept());
  }

  std::vector<Record> records;
  records.reserve(static_cast<std::size_t>(n_queries) * results_per_query);
  for (int q = 0; q < n_queries; ++q) {
    const std::string qid = std::to_string(q + 1);
    const Intercept ic = kind == ModelKind::kNoInterceptBaseline
                             ? truth.intercepts.at(kSharedInterceptKey)
                             : draw_intercept();
    if (kind != ModelKind::kNoInterceptBaseline) truth.intercepts.emplace(qid, ic);
    const double offset =
        spec.query_shift * (std::holds_alternative<ThresholdPair>(ic)
                                ? std::get<ThresholdPair>(ic).low
                                : std::get<double>(ic));
    for (int j = 0; j < results_per_query; ++j) {
      Record r;
      r.query_id = qid;
      r.features.resize(k);
      for (double& v : r.features) {
        v = rng.uniform(-spec.feature_range, spec.feature_range);
      }
      for (std::size_t f = 0; f < shift_dir.size(); ++f) {
        r.features[f] += offset * shift_dir[f];
      }
      r.label = draw_label(kind, score(truth.w, r.features), ic, rng.unit());
      records.push_back(std::move(r));
    }
  }
  return {validate_dataset(std::move(records), OrdinalScale(required_levels(kind))),
          std::move(truth)};
}

std::vector<SyntheticFold> make_folds(const Dataset& data) {
  const std::size_t n = data.num_queries();
  if (n < 5) throw DataError("need at least 5 queries to build 5 folds");
  std::vector<std::vector<Record>> parts(5);
  for (std::size_t gi = 0; gi < n; ++gi) {
    const QueryGroup& g = data.groups()[gi];
    auto& part = parts[gi * 5 / n];
    for (const Record& r : data.group_records(g)) part.push_back(r);
  }
  auto collect = [&](std::initializer_list<int> ids) {
    std::vector<Record> out;
    for (int id : ids) {
      const auto& p = parts[id % 5];
      out.insert(out.end(), p.begin(), p.end());
    }
    return validate_dataset(std::move(out), data.scale());
  };
  std::vector<SyntheticFold> folds;
  for (int f = 0; f < 5; ++f) {
    folds.push_back({collect({f, f + 1, f + 2}), collect({f + 3}), collect({f + 4})});
  }
  return folds;
}

void write_fold_tree(const std::vector<SyntheticFold>& folds,
                     const std::filesystem::path& root) {
  namespace fs = std::filesystem;
  auto write = [](const Dataset& ds, const fs::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw DataError("cannot write " + path.string());
    for (const Record& r : ds.records()) out << format_record(r) << '\n';
    if (!out) throw DataError("write error on " + path.string());
  };
  for (std::size_t f = 0; f < folds.size(); ++f) {
    const fs::path dir = root / ("Fold" + std::to_string(f + 1));
    fs::create_directories(dir);
    write(folds[f].train, dir / "train.txt");
    write(folds[f].validation, dir / "vali.txt");
    write(folds[f].test, dir / "test.txt");
  }
}

}  // namespace qirank
