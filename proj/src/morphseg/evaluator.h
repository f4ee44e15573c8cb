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

// Scores a segmentation against gold morphemic label sequences.
//
// Morphs are aligned to labels by a monotone path through the morph x label
// grid. Each visited cell (M, L) costs d(M, L) = -log2(c(M,L) / c(M)), where
// c(M,L) counts the word tokens in which M was aligned with L and c(M) the
// word tokens containing M. Distances are fitted on training segmentations by
// alternating alignment and re-counting, then used frozen to score test
// words; pairs never seen in training cost the maximum distance.

#ifndef MORPHSEG_EVALUATOR_H_
#define MORPHSEG_EVALUATOR_H_

#include <cstdint>
#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "morphseg/ml_model.h"

namespace morphseg {

struct GoldEntry {
  // Base-form constituents first, then the kept tags in file order.
  std::vector<std::string> labels;
  size_t num_base = 0;
};

using GoldAnalysis = std::map<std::string, GoldEntry>;

// Tags to keep; nullopt keeps every tag.
using TagFilter = std::optional<std::set<std::string>>;

// Reads `word<TAB>BASE#FORM TAG1 TAG2 ...` lines. Blank lines are skipped.
// Throws kParse with the line number on malformed lines. When a word occurs
// more than once, the analysis with fewer labels is kept.
GoldAnalysis ParseGold(std::istream &in, const TagFilter &filter,
                       std::vector<std::string> *warnings = nullptr);

// One tag per line; blank lines and surrounding whitespace are ignored.
std::set<std::string> ParseTagFilter(std::istream &in);

struct SegmentedWord {
  Morphs morphs;
  int64_t count = 0;
};

// Word type -> segmentation and token count.
using SegmentedCorpus = std::map<std::string, SegmentedWord>;

// Pairs every type of the segmentation with its count in type_counts; types
// with no count are skipped.
SegmentedCorpus MakeSegmentedCorpus(const Segmentation &segmentation,
                                    const TypeCounts &type_counts);

struct AlignedPair {
  size_t morph = 0;
  size_t label = 0;
  bool operator==(const AlignedPair &other) const = default;
};

using Alignment = std::vector<AlignedPair>;

class DistanceTable {
 public:
  using Key = std::pair<std::string, std::string>;

  DistanceTable() = default;
  DistanceTable(std::map<Key, double> distances, double max_distance)
      : distances_(std::move(distances)), max_distance_(max_distance) {}

  double Distance(const std::string &morph, const std::string &label) const;
  bool Contains(const std::string &morph, const std::string &label) const;

  const std::map<Key, double> &distances() const { return distances_; }
  double max_distance() const { return max_distance_; }

  bool operator==(const DistanceTable &other) const = default;

 private:
  std::map<Key, double> distances_;
  double max_distance_ = 10.0;
};

class AlignmentCounts {
 public:
  // Adds one word's alignment with the given token weight. Each distinct
  // pair and morph is counted once per word.
  void Add(const Morphs &morphs, const std::vector<std::string> &labels,
           const Alignment &alignment, int64_t weight);

  const std::map<DistanceTable::Key, int64_t> &pairs() const { return pairs_; }
  const std::map<std::string, int64_t> &morphs() const { return morphs_; }

 private:
  std::map<DistanceTable::Key, int64_t> pairs_;
  std::map<std::string, int64_t> morphs_;
};

// Added to the largest observed distance to get the unseen-pair distance.
inline constexpr double kMaxDistanceMargin = 10.0;

// d(M,L) = -log2(c(M,L) / c(M)). The unseen-pair distance is max_distance if
// given, otherwise the largest fitted distance plus kMaxDistanceMargin.
DistanceTable FitDistances(const AlignmentCounts &counts,
                           std::optional<double> max_distance = std::nullopt);

struct AlignResult {
  Alignment alignment;
  double distance = 0.0;
};

// Best monotone path from (0,0) to (n-1,m-1) moving diagonally, down (next
// morph, same label) or right (same morph, next label). The path score is
// the sum of the visited cell scores, accumulated along the path. Ties
// prefer the diagonal move, then down, then right.
AlignResult AlignGrid(size_t num_morphs, size_t num_labels,
                      const std::function<double(size_t, size_t)> &score,
                      bool maximize);

// Minimum-distance alignment under the table.
AlignResult AlignWord(const Morphs &morphs,
                      const std::vector<std::string> &labels,
                      const DistanceTable &table);

// Longest common substring length over the longer length, case-insensitive.
double SubstringSimilarity(const std::string &a, const std::string &b);

// Initial alignment maximizing string similarity between morphs and base-form
// labels; pairs with tag labels score zero.
Alignment StringMatchAlign(const Morphs &morphs, const GoldEntry &gold);

struct EmConfig {
  int max_iters = 10;
  // Stop when an iteration improves the total distance by less than this
  // fraction.
  double min_improvement = 1e-4;
  std::optional<double> max_distance;

  void Validate() const;
};

struct EmResult {
  DistanceTable table;
  // Total token-weighted training distance after each realignment.
  std::vector<double> history;
  double training_distance = 0.0;
  std::vector<std::string> excluded;
};

EmResult EmAlign(const SegmentedCorpus &segmented, const GoldAnalysis &gold,
                 const EmConfig &config);

struct WordAlignment {
  std::string word;
  Morphs morphs;
  std::vector<std::string> labels;
  Alignment alignment;
  int64_t count = 0;
};

struct Evaluation {
  double alignment_distance = 0.0;
  // Token-weighted aligned pairs and how many were unseen in training.
  int64_t aligned_pairs = 0;
  int64_t unseen_pairs = 0;
  double unseen_pair_fraction = 0.0;
  double training_distance = 0.0;
  DistanceTable table;
  std::vector<WordAlignment> test_alignments;
  std::vector<std::string> warnings;
};

// Fits distances on the training segmentation, then aligns every test word
// with the frozen table.
Evaluation Evaluate(const SegmentedCorpus &train, const SegmentedCorpus &test,
                    const GoldAnalysis &gold, const EmConfig &config);

// `word<TAB>morph:LABEL[+LABEL...] ...`, one line per word.
void WriteAlignmentDump(const std::vector<WordAlignment> &alignments,
                        std::ostream &out);

}  // namespace morphseg

#endif  // MORPHSEG_EVALUATOR_H_
