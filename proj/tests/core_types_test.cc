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

#include <cmath>
#include <limits>
#include <random>

#include "gtest/gtest.h"

namespace qirank {
namespace {

Record rec(std::string qid, int label, std::vector<double> f) {
  return Record{std::move(qid), label, std::move(f), ""};
}

TEST(OrdinalScale, OnlyTwoOrThreeLevels) {
  EXPECT_EQ(OrdinalScale(2).levels(), 2);
  EXPECT_EQ(OrdinalScale(3).levels(), 3);
  EXPECT_THROW(OrdinalScale(1), DataError);
  EXPECT_THROW(OrdinalScale(4), DataError);
  EXPECT_TRUE(OrdinalScale(3).contains(2));
  EXPECT_FALSE(OrdinalScale(2).contains(2));
  EXPECT_FALSE(OrdinalScale(2).contains(-1));
}

TEST(ValidateDataset, SingleQueryBinary) {
  const Dataset ds = validate_dataset({rec("1", 0, {1, 2}), rec("1", 1, {3, 4})});
  EXPECT_EQ(ds.num_queries(), 1u);
  EXPECT_EQ(ds.groups()[0].size(), 2u);
  EXPECT_EQ(ds.k(), 2u);
  EXPECT_EQ(ds.scale().levels(), 2);
}

TEST(ValidateDataset, InfersTrinaryScale) {
  const Dataset ds = validate_dataset({rec("a", 0, {0}), rec("a", 1, {0}),
                                       rec("b", 2, {0}), rec("b", 0, {0}),
                                       rec("c", 1, {0}), rec("c", 0, {0})});
  EXPECT_EQ(ds.scale().levels(), 3);
  EXPECT_EQ(ds.num_queries(), 3u);
  ASSERT_NE(ds.find_group("b"), nullptr);
  EXPECT_EQ(ds.find_group("b")->begin, 2u);
  EXPECT_EQ(ds.find_group("zz"), nullptr);
}

TEST(ValidateDataset, AllZeroLabelsStillBinary) {
  EXPECT_EQ(validate_dataset({rec("1", 0, {1})}).scale().levels(), 2);
}

TEST(ValidateDataset, Errors) {
  try {
    validate_dataset({rec("1", 0, {1, 2, 3}), rec("1", 0, {1, 2, 3, 4})});
    FAIL();
  } catch (const DataError& e) {
    EXPECT_NE(std::string(e.what()).find("inconsistent dimensionality"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("record 1"), std::string::npos);
  }
  EXPECT_THROW(validate_dataset({}), DataError);
  EXPECT_THROW(validate_dataset({rec("1", 3, {1})}), DataError);
  EXPECT_THROW(validate_dataset({rec("1", -1, {1})}), DataError);
  EXPECT_THROW(validate_dataset({rec("1", 2, {1})}, OrdinalScale(2)), DataError);
  EXPECT_THROW(
      validate_dataset({rec("1", 0, {std::numeric_limits<double>::quiet_NaN()})}),
      DataError);
  EXPECT_THROW(validate_dataset({rec("1", 0, {INFINITY})}), DataError);
  // A query that reappears after another one is not a contiguous group.
  EXPECT_THROW(validate_dataset({rec("1", 0, {1}), rec("2", 0, {1}), rec("1", 1, {1})}),
               DataError);
}

// Random record lists: grouping partitions the list in order, and
// revalidating an accepted dataset reproduces it.
TEST(ValidateDataset, GroupingRoundTripAndIdempotence) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Record> recs;
    const int n = 1 + static_cast<int>(rng() % 6);
    for (int q = 0; q < n; ++q) {
      const int m = 1 + static_cast<int>(rng() % 5);
      for (int j = 0; j < m; ++j) {
        recs.push_back(rec("q" + std::to_string(q), static_cast<int>(rng() % 3),
                           {static_cast<double>(rng() % 100), 0.5}));
      }
    }
    const Dataset ds = validate_dataset(recs);
    std::vector<Record> concatenated;
    for (const QueryGroup& g : ds.groups()) {
      for (const Record& r : ds.group_records(g)) concatenated.push_back(r);
    }
    EXPECT_EQ(concatenated, recs);
    EXPECT_EQ(ds.num_queries(), static_cast<std::size_t>(n));
    EXPECT_EQ(validate_dataset(ds.records(), ds.scale()), ds);
    EXPECT_EQ(validate_dataset(ds.records()).scale(), ds.scale());
  }
}

}  // namespace
}  // namespace qirank
