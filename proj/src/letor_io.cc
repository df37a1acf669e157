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

#include "qirank/letor_io.h"

#include <charconv>
#include <fstream>
#include <sstream>

namespace qirank {

namespace {

constexpr std::string_view kBlank = " \t\r\n\f\v";

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(kBlank);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(kBlank);
  return s.substr(b, e - b + 1);
}

// Splits off the next whitespace-delimited token.
std::string_view next_token(std::string_view& rest) {
  const auto b = rest.find_first_not_of(kBlank);
  if (b == std::string_view::npos) {
    rest = {};
    return {};
  }
  const auto e = rest.find_first_of(kBlank, b);
  std::string_view tok = rest.substr(b, e == std::string_view::npos ? e : e - b);
  rest = e == std::string_view::npos ? std::string_view{} : rest.substr(e);
  return tok;
}

template <typename T>
bool parse_number(std::string_view s, T& out) {
  if (s.empty()) return false;
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, out);
  return ec == std::errc() && ptr == end;
}

bool is_skippable(std::string_view line) {
  std::string_view t = trim(line);
  return t.empty() || t.front() == '#';
}

}  // namespace

Record parse_line(std::string_view line) {
  std::string_view body = line;
  Record rec;
  if (const auto hash = line.find('#'); hash != std::string_view::npos) {
    body = line.substr(0, hash);
    rec.meta = std::string(trim(line.substr(hash + 1)));
  }

  std::string_view rest = body;
  const std::string_view label_tok = next_token(rest);
  if (label_tok.empty()) throw DataError("empty line");
  if (!parse_number(label_tok, rec.label)) {
    throw DataError("non-numeric label '" + std::string(label_tok) + "'");
  }

  const std::string_view qid_tok = next_token(rest);
  if (!qid_tok.starts_with("qid:") || qid_tok.size() == 4) {
    throw DataError("missing qid: token");
  }
  rec.query_id = std::string(qid_tok.substr(4));

  std::vector<std::size_t> indices;
  std::size_t last_index = 0;
  for (std::string_view tok = next_token(rest); !tok.empty();
       tok = next_token(rest)) {
    const auto colon = tok.find(':');
    if (colon == std::string_view::npos) {
      throw DataError("malformed feature '" + std::string(tok) + "'");
    }
    std::size_t index = 0;
    if (!parse_number(tok.substr(0, colon), index)) {
      throw DataError("non-numeric feature index in '" + std::string(tok) + "'");
    }
    if (index == 0) throw DataError("non-consecutive feature index 0, expected 1");
    if (index == last_index) {
      throw DataError("duplicate feature index " + std::to_string(index));
    }
    if (index < last_index) {
      throw DataError("non-ascending feature index " + std::to_string(index));
    }
    last_index = index;
    indices.push_back(index);
    double value = 0.0;
    if (!parse_number(tok.substr(colon + 1), value)) {
      throw DataError("non-numeric feature value in '" + std::string(tok) + "'");
    }
    rec.features.push_back(value);
  }
  if (rec.features.empty()) throw DataError("empty feature list");
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] != i + 1) {
      throw DataError("non-consecutive feature index " + std::to_string(indices[i]) +
                      ", expected " + std::to_string(i + 1));
    }
  }
  return rec;
}

std::vector<Record> parse_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot read " + path.string());
  std::vector<Record> out;
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    if (is_skippable(line)) continue;
    try {
      out.push_back(parse_line(line));
    } catch (const DataError& e) {
      throw DataError(path.string() + ":" + std::to_string(lineno) + ": " +
                      e.what());
    }
  }
  if (in.bad()) throw DataError("read error on " + path.string());
  return out;
}

std::string format_double(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

std::string format_record(const Record& record) {
  std::string line = std::to_string(record.label) + " qid:" + record.query_id;
  for (std::size_t i = 0; i < record.features.size(); ++i) {
    line += ' ';
    line += std::to_string(i + 1);
    line += ':';
    line += format_double(record.features[i]);
  }
  if (!record.meta.empty()) {
    line += " #";
    line += record.meta;
  }
  return line;
}

void write_scores(std::span<const Record> records, std::span<const double> scores,
                  const std::filesystem::path& path) {
  if (records.size() != scores.size()) {
    throw DataError("score count " + std::to_string(scores.size()) +
                    " does not match record count " +
                    std::to_string(records.size()));
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot write " + path.string());
  for (double s : scores) out << format_double(s) << '\n';
  if (!out) throw DataError("write error on " + path.string());
}

std::vector<double> read_scores(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot read " + path.string());
  std::vector<double> out;
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    const std::string_view t = trim(line);
    if (t.empty()) continue;
    double v = 0.0;
    if (!parse_number(t, v)) {
      throw DataError(path.string() + ":" + std::to_string(lineno) +
                      ": non-numeric score");
    }
    out.push_back(v);
  }
  return out;
}

std::vector<FoldSpec> locate_folds(const std::filesystem::path& root) {
  namespace fs = std::filesystem;
  std::vector<FoldSpec> folds;
  for (int id = 1; id <= 5; ++id) {
    const fs::path dir = root / ("Fold" + std::to_string(id));
    if (!fs::is_directory(dir)) continue;
    FoldSpec spec{id, dir / "train.txt", dir / "vali.txt", dir / "test.txt"};
    for (const fs::path* p :
         {&spec.train_path, &spec.validation_path, &spec.test_path}) {
      if (!fs::is_regular_file(*p)) {
        throw DataError("fold " + std::to_string(id) + ": missing " + p->string());
      }
    }
    folds.push_back(std::move(spec));
  }
  if (folds.size() != 5) {
    throw DataError("expected 5 folds under " + root.string() + ", found " +
                    std::to_string(folds.size()));
  }
  return folds;
}

}  // namespace qirank
