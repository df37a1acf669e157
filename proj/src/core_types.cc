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

#include "qirank/core_types.h"

#include <algorithm>
#include <cmath>
#include <string>

namespace qirank {

namespace {

[[noreturn]] void fail_at(std::size_t index, const std::string& what) {
  throw DataError("record " + std::to_string(index) + ": " + what);
}

}  // namespace

OrdinalScale::OrdinalScale(int levels) : levels_(levels) {
  if (levels != 2 && levels != 3) {
    throw DataError("ordinal scale must have 2 or 3 levels, got " +
                    std::to_string(levels));
  }
}

const QueryGroup* Dataset::find_group(const std::string& query_id) const {
  auto it = index_.find(query_id);
  return it == index_.end() ? nullptr : &groups_[it->second];
}

Dataset validate_dataset(std::vector<Record> records,
                         std::optional<OrdinalScale> declared) {
  if (records.empty()) throw DataError("dataset has no records");

  const std::size_t k = records.front().features.size();
  int max_label = 0;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const Record& r = records[i];
    if (r.features.size() != k) {
      fail_at(i, "inconsistent dimensionality: expected " + std::to_string(k) +
                     " features, got " + std::to_string(r.features.size()));
    }
    for (double v : r.features) {
      if (!std::isfinite(v)) fail_at(i, "non-finite feature value");
    }
    if (r.label < 0) fail_at(i, "negative label " + std::to_string(r.label));
    if (declared && !declared->contains(r.label)) {
      fail_at(i, "label " + std::to_string(r.label) + " outside scale of " +
                     std::to_string(declared->levels()) + " levels");
    }
    if (r.label > 2) {
      fail_at(i, "label " + std::to_string(r.label) +
                     " exceeds the largest supported scale");
    }
    max_label = std::max(max_label, r.label);
  }

  Dataset ds(k, declared ? *declared : OrdinalScale(std::max(2, max_label + 1)));
  for (std::size_t i = 0; i < records.size(); ++i) {
    const std::string& qid = records[i].query_id;
    if (!ds.groups_.empty() && ds.groups_.back().query_id == qid) {
      ds.groups_.back().end = i + 1;
      continue;
    }
    if (ds.index_.contains(qid)) {
      fail_at(i, "query '" + qid + "' is not contiguous");
    }
    ds.index_.emplace(qid, ds.groups_.size());
    ds.groups_.push_back(QueryGroup{qid, i, i + 1});
  }
  ds.records_ = std::move(records);
  return ds;
}

}  // namespace qirank
