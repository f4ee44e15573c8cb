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


// Per-method summary statistics and their JSON-lines and text-table forms.

#ifndef MORPHSEG_REPORT_H_
#define MORPHSEG_REPORT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "morphseg/evaluator.h"
#include "morphseg/mdl_model.h"
#include "morphseg/ml_model.h"

namespace morphseg {

inline constexpr char kMethodRecMdl[] = "rec-mdl";
inline constexpr char kMethodSeqMl[] = "seq-ml";

struct MetricsReport {
  std::string method;
  std::string dataset;
  double total_mdl_cost = 0.0;
  double corpus_bits = 0.0;
  double codebook_bits = 0.0;
  int64_t codebook_morphs = 0;
  double relative_codebook_cost = 0.0;
  std::optional<double> alignment_distance;
  std::optional<double> unseen_pair_fraction;
  std::optional<double> wall_time_sec;
  // Set when the codebook cost was computed with a formula that is not the
  // method's own training objective.
  bool borrowed_codebook_cost = false;

  bool operator==(const MetricsReport &other) const = default;
};

// Sets the cost fields and the codebook share of the total.
void SetCosts(double corpus_bits, double codebook_bits, MetricsReport *report);

MetricsReport ReportFromMdl(const ChunkStore &store, const std::string &dataset);

// Corpus bits are the ML cost of the statistics; the codebook is charged
// char_bits per character of every morph type.
MetricsReport ReportFromMl(const MorphStats &stats, int char_bits,
                           const std::string &dataset);

void AttachEvaluation(const Evaluation &evaluation, MetricsReport *report);

// One JSON object, no trailing newline.
std::string ReportToJson(const MetricsReport &report);
MetricsReport ReportFromJson(const std::string &line);

std::vector<MetricsReport> ReadReports(std::istream &in);

std::string EvaluationToJson(const Evaluation &evaluation);

// Aligned text table with one row per report.
std::string FormatReportTable(const std::vector<MetricsReport> &reports);

}  // namespace morphseg

#endif  // MORPHSEG_REPORT_H_
