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

#ifndef QIRANK_CORE_TYPES_H_
#define QIRANK_CORE_TYPES_H_

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace qirank {

// Raised for any malformed input: bad records, bad files, bad parameters.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Number of ordinal relevance levels. Labels are 0..levels-1, higher is more
// relevant. Only binary and trinary scales are supported.
class OrdinalScale {
 public:
  explicit OrdinalScale(int levels);

  int levels() const { return levels_; }
  bool contains(int label) const { return label >= 0 && label < levels_; }

  friend bool operator==(const OrdinalScale&, const OrdinalScale&) = default;

 private:
  int levels_;
};

// One query/result row of a LETOR file.
struct Record {
  std::string query_id;
  int label = 0;
  std::vector<double> features;
  std::string meta;

  friend bool operator==(const Record&, const Record&) = default;
};

// A contiguous run of records sharing one query id.
struct QueryGroup {
  std::string query_id;
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - begin; }

  friend bool operator==(const QueryGroup&, const QueryGroup&) = default;
};

// Records grouped by query. Immutable once built; construct through
// validate_dataset().
class Dataset {
 public:
  // An empty dataset of dimensionality k. Useful for penalty-only objectives.
  Dataset(std::size_t k, OrdinalScale scale) : k_(k), scale_(scale) {}

  const std::vector<Record>& records() const { return records_; }
  // Groups in first-appearance order.
  const std::vector<QueryGroup>& groups() const { return groups_; }
  std::span<const Record> group_records(const QueryGroup& g) const {
    return std::span<const Record>(records_).subspan(g.begin, g.size());
  }
  // nullptr when the query id is absent.
  const QueryGroup* find_group(const std::string& query_id) const;

  std::size_t k() const { return k_; }
  const OrdinalScale& scale() const { return scale_; }
  std::size_t num_queries() const { return groups_.size(); }
  std::size_t size() const { return records_.size(); }
  bool empty() const { return records_.empty(); }

  friend bool operator==(const Dataset& a, const Dataset& b) {
    return a.k_ == b.k_ && a.scale_ == b.scale_ && a.records_ == b.records_ &&
           a.groups_ == b.groups_;
  }

 private:
  friend Dataset validate_dataset(std::vector<Record>,
                                  std::optional<OrdinalScale>);

  std::vector<Record> records_;
  std::vector<QueryGroup> groups_;
  std::map<std::string, std::size_t> index_;
  std::size_t k_;
  OrdinalScale scale_;
};

// Checks dimensionality, finiteness, label range and query contiguity, then
// groups by query. When `declared` is empty the scale is inferred as
// (max label)+1, at least 2. Errors name the offending record index.
Dataset validate_dataset(std::vector<Record> records,
                         std::optional<OrdinalScale> declared = std::nullopt);

// Benchmark pair for a three-level scale. high > low is typical after fitting
// but never required.
struct ThresholdPair {
  double high = 0.0;
  double low = 0.0;

  friend bool operator==(const ThresholdPair&, const ThresholdPair&) = default;
};

using Intercept = std::variant<double, ThresholdPair>;

// Intercept key used by the shared-intercept baseline in place of a query id.
// Query ids parsed from files are never empty, so this cannot collide.
inline const std::string kSharedInterceptKey;

struct ModelParams {
  std::vector<double> w;
  // Ordered by query id; this order is the flat parameter layout.
  std::map<std::string, Intercept> intercepts;

  friend bool operator==(const ModelParams&, const ModelParams&) = default;
};

}  // namespace qirank

#endif  // QIRANK_CORE_TYPES_H_
