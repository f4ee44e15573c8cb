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

// Batch segmentation by hard (Viterbi) EM under a unigram morph likelihood.
// Words start from random Poisson-length splits; each iteration re-estimates
// morph probabilities, re-segments every word type with Viterbi search, and
// replaces suspicious segmentations with fresh random ones.

#ifndef MORPHSEG_ML_MODEL_H_
#define MORPHSEG_ML_MODEL_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "morphseg/corpus.h"
#include "morphseg/rng.h"

namespace morphseg {

using Morphs = std::vector<std::string>;

// Word type -> morph sequence.
using Segmentation = std::map<std::string, Morphs>;

struct MorphStats {
  // Morph -> token count.
  std::unordered_map<std::string, int64_t> counts;
  int64_t total = 0;
  // Morph -> number of word types whose segmentation uses it.
  std::unordered_map<std::string, int64_t> type_usage;

  bool empty() const { return total == 0; }
  // -log2 of the relative frequency; nullopt for unknown morphs.
  std::optional<double> Bits(const std::string &morph) const;
};

// Token-weighted morph counts and type usage of a segmentation.
MorphStats EstimateStats(const Segmentation &segmentation,
                         const TypeCounts &type_counts);

// Splits at Poisson(lambda) intervals from the start of the word; an
// interval reaching the end of the word ends splitting. Zero draws are
// redrawn.
Morphs RandomSegment(std::string_view word, Rng &rng,
                     const PoissonSampler &sampler);

struct ViterbiResult {
  Morphs morphs;
  double bits = 0.0;
};

// Minimum-cost segmentation into morphs known to stats. Ties go to fewer
// morphs, then to the lexicographically smallest boundary positions.
// nullopt when no segmentation exists.
std::optional<ViterbiResult> ViterbiSegment(std::string_view word,
                                            const MorphStats &stats);

enum class RejectReason {
  kAccept = 0,
  kRareMorph,           // a morph used by a single word type last iteration
  kOneLetterSequence,   // two or more consecutive one-letter morphs
};

const char *RejectReasonName(RejectReason reason);

RejectReason Reject(const Morphs &morphs,
                    const std::unordered_map<std::string, int64_t> &prev_usage);

// Sum over all morph tokens of -log2 p(m), with p estimated from the
// segmentation itself. Word types missing from the segmentation are an error.
double MlCost(const Segmentation &segmentation, const TypeCounts &type_counts);

// Same quantity from morph counts alone.
double MlCostFromStats(const MorphStats &stats);

struct MlConfig {
  int iterations = 10;
  double lambda = 5.5;
  // Rejection and random fallback; disabling both makes training plain
  // Viterbi EM.
  bool reject = true;
  uint64_t seed = 42;

  void Validate() const;
};

struct MlModel {
  Segmentation segmentation;
  MorphStats stats;
  // MlCost of the initial random segmentation followed by the cost after
  // each iteration.
  std::vector<double> cost_history;
};

MlModel TrainEm(const Corpus &corpus, const MlConfig &config);

// Segments word types with a trained model. Words the model cannot cover
// fall back to a random segmentation drawn from rng.
Segmentation SegmentWithStats(const std::vector<std::string> &words,
                              const MorphStats &stats, Rng &rng,
                              const PoissonSampler &sampler);

}  // namespace morphseg

#endif  // MORPHSEG_ML_MODEL_H_
