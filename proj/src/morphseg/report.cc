// Copyright 2026 The Morphseg Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "morphseg/report.h"

#include <algorithm>
#include <cstdio>
#include <istream>

#include <json.hpp>

#include "morphseg/errors.h"
#include "morphseg/text.h"

namespace morphseg {

namespace {

using nlohmann::json;

json OptionalNumber(const std::optional<double> &value) {
  return value ? json(*value) : json(nullptr);
}

std::optional<double> ReadOptional(const json &obj, const char *key) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  if (!it->is_number()) {
    Fail(ErrorCode::kParse, std::string("report field '") + key +
                                "' is not a number");
  }
  return it->get<double>();
}

std::string Printf(const char *format, double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), format, value);
  return buf;
}

std::string DisplayName(const MetricsReport &report) {
  std::string name = report.method == kMethodRecMdl   ? "Rec. MDL"
                     : report.method == kMethodSeqMl ? "Seq. ML"
                                                     : report.method;
  if (report.borrowed_codebook_cost) name += "*";
  return name;
}

}  // namespace

void SetCosts(double corpus_bits, double codebook_bits,
              MetricsReport *report) {
  if (!(corpus_bits >= 0.0) || !(codebook_bits >= 0.0)) {
    Fail(ErrorCode::kInvalidArgument, "costs must be non-negative");
  }
  report->corpus_bits = corpus_bits;
  report->codebook_bits = codebook_bits;
  report->total_mdl_cost = corpus_bits + codebook_bits;
  report->relative_codebook_cost =
      report->total_mdl_cost > 0.0 ? codebook_bits / report->total_mdl_cost
                                   : 0.0;
}

MetricsReport ReportFromMdl(const ChunkStore &store,
                            const std::string &dataset) {
  MdlCost cost = TotalCost(store);
  MetricsReport report;
  report.method = kMethodRecMdl;
  report.dataset = dataset;
  report.codebook_morphs = static_cast<int64_t>(store.num_morphs());
  SetCosts(cost.corpus_bits, cost.codebook_bits, &report);
  return report;
}

MetricsReport ReportFromMl(const MorphStats &stats, int char_bits,
                           const std::string &dataset) {
  if (char_bits < 1) Fail(ErrorCode::kInvalidArgument, "char_bits must be positive");
  int64_t chars = 0;
  int64_t morphs = 0;
  for (const auto &[morph, count] : stats.counts) {
    if (count <= 0) continue;
    chars += static_cast<int64_t>(CharLength(morph));
    ++morphs;
  }
  MetricsReport report;
  report.method = kMethodSeqMl;
  report.dataset = dataset;
  report.codebook_morphs = morphs;
  report.borrowed_codebook_cost = true;
  SetCosts(MlCostFromStats(stats), static_cast<double>(char_bits) * chars,
           &report);
  return report;
}

void AttachEvaluation(const Evaluation &evaluation, MetricsReport *report) {
  report->alignment_distance = evaluation.alignment_distance;
  report->unseen_pair_fraction = evaluation.unseen_pair_fraction;
}

std::string ReportToJson(const MetricsReport &report) {
  json obj;
  obj["method"] = report.method;
  obj["dataset"] = report.dataset;
  obj["total_mdl_cost"] = report.total_mdl_cost;
  obj["corpus_bits"] = report.corpus_bits;
  obj["codebook_bits"] = report.codebook_bits;
  obj["codebook_morphs"] = report.codebook_morphs;
  obj["relative_codebook_cost"] = report.relative_codebook_cost;
  obj["alignment_distance"] = OptionalNumber(report.alignment_distance);
  obj["unseen_pair_fraction"] = OptionalNumber(report.unseen_pair_fraction);
  obj["wall_time_sec"] = OptionalNumber(report.wall_time_sec);
  obj["borrowed_codebook_cost"] = report.borrowed_codebook_cost;
  return obj.dump();
}

MetricsReport ReportFromJson(const std::string &line) {
  json obj = json::parse(line, nullptr, false);
  if (obj.is_discarded() || !obj.is_object()) {
    Fail(ErrorCode::kParse, "report line is not a JSON object");
  }
  MetricsReport report;
  try {
    report.method = obj.at("method").get<std::string>();
    report.dataset = obj.at("dataset").get<std::string>();
    report.total_mdl_cost = obj.at("total_mdl_cost").get<double>();
    report.corpus_bits = obj.at("corpus_bits").get<double>();
    report.codebook_bits = obj.at("codebook_bits").get<double>();
    report.codebook_morphs = obj.at("codebook_morphs").get<int64_t>();
    report.relative_codebook_cost =
        obj.at("relative_codebook_cost").get<double>();
    report.borrowed_codebook_cost =
        obj.value("borrowed_codebook_cost", false);
  } catch (const json::exception &e) {
    Fail(ErrorCode::kParse, std::string("bad report record: ") + e.what());
  }
  report.alignment_distance = ReadOptional(obj, "alignment_distance");
  report.unseen_pair_fraction = ReadOptional(obj, "unseen_pair_fraction");
  report.wall_time_sec = ReadOptional(obj, "wall_time_sec");
  return report;
}

std::vector<MetricsReport> ReadReports(std::istream &in) {
  std::vector<MetricsReport> reports;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (SplitWhitespace(line).empty()) continue;
    try {
      reports.push_back(ReportFromJson(line));
    } catch (const Error &e) {
      Fail(e.code(), "line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return reports;
}

std::string EvaluationToJson(const Evaluation &evaluation) {
  json obj;
  obj["alignment_distance"] = evaluation.alignment_distance;
  obj["unseen_pair_fraction"] = evaluation.unseen_pair_fraction;
  obj["aligned_pairs"] = evaluation.aligned_pairs;
  obj["unseen_pairs"] = evaluation.unseen_pairs;
  obj["training_distance"] = evaluation.training_distance;
  obj["max_distance"] = evaluation.table.max_distance();
  obj["test_words"] = evaluation.test_alignments.size();
  obj["warnings"] = evaluation.warnings.size();
  return obj.dump();
}

std::string FormatReportTable(const std::vector<MetricsReport> &reports) {
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"Method", "Total MDL cost [bits]", "#morphs in codebook",
                  "Relative codebook cost", "Alignment distance",
                  "Unseen aligned pairs", "Time [sec]"});
  bool footnote = false;
  for (const MetricsReport &r : reports) {
    footnote = footnote || r.borrowed_codebook_cost;
    rows.push_back({
        DisplayName(r),
        Printf("%.0f", r.total_mdl_cost),
        std::to_string(r.codebook_morphs),
        Printf("%.2f%%", 100.0 * r.relative_codebook_cost),
        r.alignment_distance ? Printf("%.0f", *r.alignment_distance) : "-",
        r.unseen_pair_fraction ? Printf("%.2f%%", 100.0 * *r.unseen_pair_fraction)
                               : "-",
        r.wall_time_sec ? Printf("%.1f", *r.wall_time_sec) : "-",
    });
  }
  std::vector<size_t> widths(rows[0].size(), 0);
  for (const auto &row : rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      widths[i] = std::max(widths[i], row[i].size());
    }
  }
  std::string out;
  for (const auto &row : rows) {
    std::string line;
    for (size_t i = 0; i < row.size(); ++i) {
      if (i == 0) {
        line += row[i] + std::string(widths[i] - row[i].size(), ' ');
      } else {
        line += "  " + std::string(widths[i] - row[i].size(), ' ') + row[i];
      }
    }
    out += line + '\n';
  }
  if (footnote) {
    out += "* codebook cost computed with the recursive MDL formula\n";
  }
  return out;
}

}  // namespace morphseg
