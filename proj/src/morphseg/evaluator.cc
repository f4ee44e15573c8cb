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

#include "morphseg/evaluator.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "morphseg/errors.h"
#include "morphseg/text.h"

namespace morphseg {

namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && IsSpace(s.front())) s.remove_prefix(1);
  while (!s.empty() && IsSpace(s.back())) s.remove_suffix(1);
  return s;
}

}  // namespace

GoldAnalysis ParseGold(std::istream &in, const TagFilter &filter,
                       std::vector<std::string> *warnings) {
  GoldAnalysis gold;
  std::string line;
  size_t line_number = 0;
  auto fail = [&](const std::string &what) {
    Fail(ErrorCode::kParse,
         "gold line " + std::to_string(line_number) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (Trim(line).empty()) continue;
    std::u32string scratch;
    if (!DecodeUtf8(line, &scratch)) fail("invalid UTF-8");
    std::vector<std::string_view> fields = SplitFields(line, '\t');
    if (fields.size() != 2) fail("expected word<TAB>analysis");
    std::string_view word = Trim(fields[0]);
    if (word.empty()) fail("empty word");
    std::vector<std::string_view> parts = SplitWhitespace(fields[1]);
    if (parts.empty()) fail("empty analysis");

    GoldEntry entry;
    for (std::string_view base : SplitFields(parts[0], '#')) {
      if (!base.empty()) entry.labels.emplace_back(base);
    }
    entry.num_base = entry.labels.size();
    for (size_t i = 1; i < parts.size(); ++i) {
      std::string tag(parts[i]);
      if (!filter || filter->count(tag) > 0) entry.labels.push_back(tag);
    }
    if (entry.labels.empty()) {
      if (warnings != nullptr) {
        warnings->push_back("gold line " + std::to_string(line_number) +
                            ": no labels left for '" + std::string(word) +
                            "', dropped");
      }
      continue;
    }
    std::string key(word);
    auto it = gold.find(key);
    if (it == gold.end() || entry.labels.size() < it->second.labels.size()) {
      gold[key] = std::move(entry);
    }
  }
  if (in.bad()) Fail(ErrorCode::kIo, "read error while loading gold file");
  return gold;
}

std::set<std::string> ParseTagFilter(std::istream &in) {
  std::set<std::string> tags;
  std::string line;
  while (std::getline(in, line)) {
    std::string_view tag = Trim(line);
    if (!tag.empty()) tags.emplace(tag);
  }
  return tags;
}

SegmentedCorpus MakeSegmentedCorpus(const Segmentation &segmentation,
                                    const TypeCounts &type_counts) {
  SegmentedCorpus out;
  for (const auto &[word, count] : type_counts) {
    auto it = segmentation.find(word);
    if (it == segmentation.end() || count <= 0) continue;
    out[word] = SegmentedWord{it->second, count};
  }
  return out;
}

double DistanceTable::Distance(const std::string &morph,
                               const std::string &label) const {
  auto it = distances_.find(Key(morph, label));
  return it == distances_.end() ? max_distance_ : it->second;
}

bool DistanceTable::Contains(const std::string &morph,
                             const std::string &label) const {
  return distances_.count(Key(morph, label)) > 0;
}

void AlignmentCounts::Add(const Morphs &morphs,
                          const std::vector<std::string> &labels,
                          const Alignment &alignment, int64_t weight) {
  std::set<DistanceTable::Key> seen_pairs;
  for (const AlignedPair &pair : alignment) {
    seen_pairs.emplace(morphs.at(pair.morph), labels.at(pair.label));
  }
  for (const auto &key : seen_pairs) pairs_[key] += weight;
  std::set<std::string> seen_morphs(morphs.begin(), morphs.end());
  for (const auto &morph : seen_morphs) morphs_[morph] += weight;
}

DistanceTable FitDistances(const AlignmentCounts &counts,
                           std::optional<double> max_distance) {
  std::map<DistanceTable::Key, double> distances;
  double largest = 0.0;
  for (const auto &[key, pair_count] : counts.pairs()) {
    int64_t morph_count = counts.morphs().at(key.first);
    double d = 0.0;
    if (pair_count != morph_count) {
      d = -std::log2(static_cast<double>(pair_count) /
                     static_cast<double>(morph_count));
    }
    distances.emplace(key, d);
    largest = std::max(largest, d);
  }
  double unseen = max_distance ? *max_distance : largest + kMaxDistanceMargin;
  return DistanceTable(std::move(distances), unseen);
}

AlignResult AlignGrid(size_t num_morphs, size_t num_labels,
                      const std::function<double(size_t, size_t)> &score,
                      bool maximize) {
  if (num_morphs == 0 || num_labels == 0) {
    Fail(ErrorCode::kInvalidArgument, "alignment of an empty sequence");
  }
  enum Move : unsigned char { kStart, kDiagonal, kDown, kRight };
  const size_t cols = num_labels;
  std::vector<double> total(num_morphs * num_labels);
  std::vector<Move> back(num_morphs * num_labels, kStart);
  auto better = [maximize](double a, double b) {
    return maximize ? a > b : a < b;
  };

  for (size_t i = 0; i < num_morphs; ++i) {
    for (size_t j = 0; j < num_labels; ++j) {
      double cell = score(i, j);
      if (i == 0 && j == 0) {
        total[0] = cell;
        continue;
      }
      bool found = false;
      double best = 0.0;
      Move move = kStart;
      auto consider = [&](bool valid, size_t pi, size_t pj, Move m) {
        if (!valid) return;
        double prev = total[pi * cols + pj];
        if (!found || better(prev, best)) {
          best = prev;
          move = m;
          found = true;
        }
      };
      consider(i > 0 && j > 0, i - 1, j - 1, kDiagonal);
      consider(i > 0, i - 1, j, kDown);
      consider(j > 0, i, j - 1, kRight);
      total[i * cols + j] = best + cell;
      back[i * cols + j] = move;
    }
  }

  AlignResult result;
  result.distance = total.back();
  size_t i = num_morphs - 1, j = num_labels - 1;
  for (;;) {
    result.alignment.push_back({i, j});
    Move move = back[i * cols + j];
    if (move == kStart) break;
    if (move != kRight) --i;
    if (move != kDown) --j;
  }
  std::reverse(result.alignment.begin(), result.alignment.end());
  return result;
}

AlignResult AlignWord(const Morphs &morphs,
                      const std::vector<std::string> &labels,
                      const DistanceTable &table) {
  return AlignGrid(
      morphs.size(), labels.size(),
      [&](size_t i, size_t j) { return table.Distance(morphs[i], labels[j]); },
      /*maximize=*/false);
}

double SubstringSimilarity(const std::string &a, const std::string &b) {
  std::u32string x, y;
  if (!DecodeUtf8(a, &x) || !DecodeUtf8(b, &y)) return 0.0;
  if (x.empty() || y.empty()) return 0.0;
  for (char32_t &c : x) c = ToLower(c);
  for (char32_t &c : y) c = ToLower(c);
  // Longest common substring by the usual O(|x||y|) suffix table.
  std::vector<size_t> prev(y.size() + 1, 0), cur(y.size() + 1, 0);
  size_t longest = 0;
  for (size_t i = 1; i <= x.size(); ++i) {
    for (size_t j = 1; j <= y.size(); ++j) {
      cur[j] = x[i - 1] == y[j - 1] ? prev[j - 1] + 1 : 0;
      longest = std::max(longest, cur[j]);
    }
    std::swap(prev, cur);
  }
  return static_cast<double>(longest) /
         static_cast<double>(std::max(x.size(), y.size()));
}

Alignment StringMatchAlign(const Morphs &morphs, const GoldEntry &gold) {
  std::vector<double> scores(morphs.size() * gold.labels.size(), 0.0);
  for (size_t i = 0; i < morphs.size(); ++i) {
    for (size_t j = 0; j < gold.num_base; ++j) {
      scores[i * gold.labels.size() + j] =
          SubstringSimilarity(morphs[i], gold.labels[j]);
    }
  }
  return AlignGrid(
             morphs.size(), gold.labels.size(),
             [&](size_t i, size_t j) {
               return scores[i * gold.labels.size() + j];
             },
             /*maximize=*/true)
      .alignment;
}

void EmConfig::Validate() const {
  if (max_iters < 1) {
    Fail(ErrorCode::kInvalidArgument, "max_iters must be at least 1");
  }
  if (!(min_improvement >= 0.0)) {
    Fail(ErrorCode::kInvalidArgument, "min_improvement must be non-negative");
  }
  if (max_distance && !(*max_distance >= 0.0)) {
    Fail(ErrorCode::kInvalidArgument, "max_distance must be non-negative");
  }
}

EmResult EmAlign(const SegmentedCorpus &segmented, const GoldAnalysis &gold,
                 const EmConfig &config) {
  config.Validate();
  EmResult result;
  struct Item {
    const std::string *word;
    const SegmentedWord *seg;
    const GoldEntry *gold;
    Alignment alignment;
  };
  std::vector<Item> items;
  for (const auto &[word, seg] : segmented) {
    auto it = gold.find(word);
    if (it == gold.end()) {
      result.excluded.push_back(word);
      continue;
    }
    if (seg.morphs.empty() || seg.count <= 0) continue;
    items.push_back({&word, &seg, &it->second,
                     StringMatchAlign(seg.morphs, it->second)});
  }

  double best_total = std::numeric_limits<double>::infinity();
  double prev_total = std::numeric_limits<double>::infinity();
  for (int iter = 0; iter < config.max_iters; ++iter) {
    AlignmentCounts counts;
    for (const Item &item : items) {
      counts.Add(item.seg->morphs, item.gold->labels, item.alignment,
                 item.seg->count);
    }
    DistanceTable table = FitDistances(counts, config.max_distance);
    double total = 0.0;
    for (Item &item : items) {
      AlignResult aligned =
          AlignWord(item.seg->morphs, item.gold->labels, table);
      total += static_cast<double>(item.seg->count) * aligned.distance;
      item.alignment = std::move(aligned.alignment);
    }
    result.history.push_back(total);
    if (total < best_total || iter == 0) {
      best_total = total;
      result.table = std::move(table);
    }
    if (total == 0.0) break;
    if (std::isfinite(prev_total) &&
        prev_total - total < config.min_improvement * prev_total) {
      break;
    }
    prev_total = total;
  }
  result.training_distance = best_total;
  return result;
}

Evaluation Evaluate(const SegmentedCorpus &train, const SegmentedCorpus &test,
                    const GoldAnalysis &gold, const EmConfig &config) {
  EmResult fitted = EmAlign(train, gold, config);
  Evaluation eval;
  for (const std::string &word : fitted.excluded) {
    eval.warnings.push_back("training word '" + word +
                            "' has no gold analysis, excluded");
  }
  eval.training_distance = fitted.training_distance;
  eval.table = std::move(fitted.table);
  for (const auto &[word, seg] : test) {
    auto it = gold.find(word);
    if (it == gold.end()) {
      eval.warnings.push_back("test word '" + word +
                              "' has no gold analysis, excluded");
      continue;
    }
    if (seg.morphs.empty() || seg.count <= 0) continue;
    const std::vector<std::string> &labels = it->second.labels;
    AlignResult aligned = AlignWord(seg.morphs, labels, eval.table);
    eval.alignment_distance +=
        static_cast<double>(seg.count) * aligned.distance;
    for (const AlignedPair &pair : aligned.alignment) {
      eval.aligned_pairs += seg.count;
      if (!eval.table.Contains(seg.morphs[pair.morph], labels[pair.label])) {
        eval.unseen_pairs += seg.count;
      }
    }
    eval.test_alignments.push_back(
        {word, seg.morphs, labels, std::move(aligned.alignment), seg.count});
  }
  if (eval.aligned_pairs > 0) {
    eval.unseen_pair_fraction = static_cast<double>(eval.unseen_pairs) /
                                static_cast<double>(eval.aligned_pairs);
  }
  return eval;
}

void WriteAlignmentDump(const std::vector<WordAlignment> &alignments,
                        std::ostream &out) {
  for (const WordAlignment &wa : alignments) {
    out << wa.word << '\t';
    for (size_t i = 0; i < wa.morphs.size(); ++i) {
      if (i > 0) out << ' ';
      out << wa.morphs[i] << ':';
      bool first = true;
      for (const AlignedPair &pair : wa.alignment) {
        if (pair.morph != i) continue;
        if (!first) out << '+';
        out << wa.labels[pair.label];
        first = false;
      }
    }
    out << '\n';
  }
}

}  // namespace morphseg
