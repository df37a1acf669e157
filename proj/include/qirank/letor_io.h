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

// Reading and writing of LETOR 2.0 text files:
//
//   <label> qid:<id> 1:<v1> 2:<v2> ... k:<vk> [#<meta>]
//
// Feature indices are 1-based, consecutive and ascending. Lines whose first
// non-blank character is '#' are comments.

#ifndef QIRANK_LETOR_IO_H_
#define QIRANK_LETOR_IO_H_

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qirank/core_types.h"

namespace qirank {

struct FoldSpec {
  int fold_id = 0;
  std::filesystem::path train_path;
  std::filesystem::path validation_path;
  std::filesystem::path test_path;
};

Record parse_line(std::string_view line);

// Skips blank and comment lines. Errors carry the 1-based line number.
std::vector<Record> parse_file(const std::filesystem::path& path);

// Canonical LETOR line for a record; parse_line() inverts it on
// (label, query_id, features).
std::string format_record(const Record& record);

// Shortest decimal string that parses back to exactly `value`.
std::string format_double(double value);

// One score per line, in record order.
void write_scores(std::span<const Record> records, std::span<const double> scores,
                  const std::filesystem::path& path);

// Reads a score file produced by write_scores().
std::vector<double> read_scores(const std::filesystem::path& path);

// Resolves root/Fold1..Fold5/{train,vali,test}.txt. Throws unless all five
// folds exist with all three files.
std::vector<FoldSpec> locate_folds(const std::filesystem::path& root);

}  // namespace qirank

#endif  // QIRANK_LETOR_IO_H_
