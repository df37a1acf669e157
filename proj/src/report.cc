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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>

#include "qirank/experiment.h"

namespace qirank {

namespace {

constexpr std::string_view kThisMethod = "This";

std::string fixed3(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

// One emitted table row: a method name and an optional cell per column.
struct Row {
  std::string method;
  std::vector<std::optional<MeanStdev>> cells;
};

std::optional<std::size_t> published_slot(int cutoff) {
  for (std::size_t i = 0; i < kPublishedCutoffs.size(); ++i) {
    if (kPublishedCutoffs[i] == cutoff) return i;
  }
  return std::nullopt;
}

enum class Measure { kNdcg, kPrecision, kMap };

std::vector<Row> build_rows(const AggregateReport& report, Measure measure) {
  const auto& cutoffs = report.metric_config.cutoffs;
  std::vector<Row> rows;
  Row self{std::string(kThisMethod), {}};
  if (measure == Measure::kMap) {
    self.cells.emplace_back(report.map);
  } else {
    const auto& src = measure == Measure::kNdcg ? report.ndcg : report.precision;
    self.cells.assign(src.begin(), src.end());
  }
  rows.push_back(std::move(self));

  for (const PublishedRow& p : report.baselines) {
    Row row{std::string(p.method), {}};
    if (measure == Measure::kMap) {
      row.cells.emplace_back(p.map);
    } else {
      const auto& src = measure == Measure::kNdcg ? p.ndcg : p.precision;
      for (int c : cutoffs) {
        const auto slot = published_slot(c);
        row.cells.push_back(slot ? std::optional<MeanStdev>(src[*slot]) : std::nullopt);
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<std::string> headers(const AggregateReport& report, Measure measure) {
  if (measure == Measure::kMap) return {"MAP"};
  const std::string prefix = measure == Measure::kNdcg ? "NDCG@" : "P@";
  std::vector<std::string> out;
  for (int c : report.metric_config.cutoffs) out.push_back(prefix + std::to_string(c));
  return out;
}

std::string emit_csv(const AggregateReport& report) {
  constexpr Measure kMeasures[] = {Measure::kNdcg, Measure::kPrecision, Measure::kMap};
  std::ostringstream out;
  out << "method";
  for (Measure m : kMeasures) {
    for (const std::string& h : headers(report, m)) out << ',' << h;
  }
  out << '\n';

  std::vector<std::vector<Row>> tables;
  for (Measure m : kMeasures) tables.push_back(build_rows(report, m));
  for (std::size_t r = 0; r < tables.front().size(); ++r) {
    out << tables.front()[r].method;
    for (const auto& table : tables) {
      for (const auto& cell : table[r].cells) {
        out << ',';
        if (cell) out << format_cell(*cell);
      }
    }
    out << '\n';
  }
  return out.str();
}

void emit_markdown_table(std::ostringstream& out, const std::string& title,
                         const std::vector<std::string>& cols,
                         const std::vector<Row>& rows) {
  out << "## " << title << "\n\n|";
  for (const std::string& c : cols) out << " | " << c;
  out << " |\n|---";
  for (std::size_t i = 0; i < cols.size(); ++i) out << "|---";
  out << "|\n";

  // Best per column, compared at the printed precision so printed ties are
  // all marked.
  std::vector<std::string> best(cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    std::optional<double> top;
    for (const Row& row : rows) {
      if (row.cells[c]) top = std::max(top.value_or(-1.0), row.cells[c]->mean);
    }
    if (top) best[c] = fixed3(*top);
  }

  for (const Row& row : rows) {
    out << "| " << row.method;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      out << " | ";
      if (!row.cells[c]) continue;
      const std::string text = format_cell(*row.cells[c]);
      if (fixed3(row.cells[c]->mean) == best[c]) {
        out << "**" << text << "**";
      } else {
        out << text;
      }
    }
    out << " |\n";
  }
  out << '\n';
}

std::string emit_markdown(const AggregateReport& report) {
  std::ostringstream out;
  out << "# " << (report.collection ? to_string(*report.collection) : "Experiment")
      << ": " << to_string(report.kind) << " model, mean ± stdev over "
      << report.folds.size() << " folds\n\n";
  emit_markdown_table(out, "NDCG", headers(report, Measure::kNdcg),
                      build_rows(report, Measure::kNdcg));
  emit_markdown_table(out, "Precision", headers(report, Measure::kPrecision),
                      build_rows(report, Measure::kPrecision));
  emit_markdown_table(out, "MAP", headers(report, Measure::kMap),
                      build_rows(report, Measure::kMap));

  out << "## Folds\n\n| Fold | MAP | Queries | Iterations | Converged | Note |\n"
         "|---|---|---|---|---|---|\n";
  for (const FoldResult& f : report.folds) {
    out << "| " << f.fold_id << " | " << fixed3(f.average.average_precision) << " | "
        << f.per_query.size() << " | " << f.iterations << " | "
        << (f.converged ? "yes" : "no") << " | " << f.warning << " |\n";
  }
  return out.str();
}

}  // namespace

std::string format_cell(const MeanStdev& cell) {
  return fixed3(cell.mean) + " ± " + fixed3(cell.stdev);
}

std::string emit_report(const AggregateReport& report, ReportFormat format) {
  if (report.folds.empty() || report.ndcg.empty() ||
      report.ndcg.size() != report.metric_config.cutoffs.size() ||
      report.precision.size() != report.ndcg.size()) {
    throw DataError("report has no metrics");
  }
  switch (format) {
    case ReportFormat::kCsv: return emit_csv(report);
    case ReportFormat::kMarkdown: return emit_markdown(report);
  }
  throw DataError("unknown report format");
}

}  // namespace qirank
