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

#include "morphseg/ml_model.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "morphseg/errors.h"
#include "morphseg/text.h"

namespace morphseg {

std::optional<double> MorphStats::Bits(const std::string &morph) const {
  auto it = counts.find(morph);
  if (it == counts.end() || it->second <= 0 || total <= 0) return std::nullopt;
  return -std::log2(static_cast<double>(it->second) /
                    static_cast<double>(total));
}

MorphStats EstimateStats(const Segmentation &segmentation,
                         const TypeCounts &type_counts) {
  MorphStats stats;
  for (const auto &[word, morphs] : segmentation) {
    auto tc = type_counts.find(word);
    int64_t weight = tc == type_counts.end() ? 0 : tc->second;
    if (weight <= 0) continue;
    std::set<std::string_view> used;
    for (const std::string &morph : morphs) {
      stats.counts[morph] += weight;
      stats.total += weight;
      if (used.insert(morph).second) ++stats.type_usage[morph];
    }
  }
  return stats;
}

Morphs RandomSegment(std::string_view word, Rng &rng,
                     const PoissonSampler &sampler) {
  if (word.empty()) Fail(ErrorCode::kInvalidArgument, "empty word");
  std::vector<size_t> bounds = CharBoundaries(word);
  const size_t length = bounds.size() - 1;
  Morphs morphs;
  size_t pos = 0;
  for (;;) {
    size_t remaining = length - pos;
    size_t interval = static_cast<size_t>(sampler.DrawPositive(rng));
    if (interval >= remaining) {
      morphs.emplace_back(word.substr(bounds[pos]));
      return morphs;
    }
    morphs.emplace_back(
        word.substr(bounds[pos], bounds[pos + interval] - bounds[pos]));
    pos += interval;
  }
}

std::optional<ViterbiResult> ViterbiSegment(std::string_view word,
                                            const MorphStats &stats) {
  if (stats.empty()) {
    Fail(ErrorCode::kInvalidArgument, "Viterbi search with empty statistics");
  }
  std::vector<size_t> bounds = CharBoundaries(word);
  const size_t length = bounds.size() - 1;
  if (length == 0) return std::nullopt;

  struct Cell {
    double bits = std::numeric_limits<double>::infinity();
    int morphs = 0;
    size_t prev = 0;
    bool reachable = false;
  };
  std::vector<Cell> best(length + 1);
  best[0].bits = 0.0;
  best[0].reachable = true;

  // Cut positions (excluding 0) of the best path ending at `end`, ascending.
  auto cuts_to = [&](size_t end) {
    std::vector<size_t> path;
    for (size_t pos = end; pos > 0; pos = best[pos].prev) path.push_back(pos);
    return std::vector<size_t>(path.rbegin(), path.rend());
  };

  std::string morph;
  for (size_t end = 1; end <= length; ++end) {
    for (size_t start = 0; start < end; ++start) {
      if (!best[start].reachable) continue;
      morph.assign(word.substr(bounds[start], bounds[end] - bounds[start]));
      std::optional<double> bits = stats.Bits(morph);
      if (!bits) continue;
      double cand = best[start].bits + *bits;
      int cand_morphs = best[start].morphs + 1;
      Cell &cell = best[end];
      bool take = false;
      if (!cell.reachable || cand < cell.bits) {
        take = true;
      } else if (cand == cell.bits) {
        if (cand_morphs < cell.morphs) {
          take = true;
        } else if (cand_morphs == cell.morphs) {
          // Both paths end with the cut at `end`.
          take = cuts_to(start) < cuts_to(cell.prev);
        }
      }
      if (take) {
        cell.bits = cand;
        cell.morphs = cand_morphs;
        cell.prev = start;
        cell.reachable = true;
      }
    }
  }
  if (!best[length].reachable) return std::nullopt;

  ViterbiResult result;
  result.bits = best[length].bits;
  std::vector<size_t> cuts;
  for (size_t pos = length; pos > 0; pos = best[pos].prev) cuts.push_back(pos);
  size_t start = 0;
  for (auto it = cuts.rbegin(); it != cuts.rend(); ++it) {
    result.morphs.emplace_back(
        word.substr(bounds[start], bounds[*it] - bounds[start]));
    start = *it;
  }
  return result;
}

const char *RejectReasonName(RejectReason reason) {
  switch (reason) {
    case RejectReason::kAccept:
      return "accept";
    case RejectReason::kRareMorph:
      return "rare-morph";
    case RejectReason::kOneLetterSequence:
      return "one-letter-sequence";
  }
  return "unknown";
}

RejectReason Reject(
    const Morphs &morphs,
    const std::unordered_map<std::string, int64_t> &prev_usage) {
  for (size_t i = 1; i < morphs.size(); ++i) {
    if (CharLength(morphs[i - 1]) == 1 && CharLength(morphs[i]) == 1) {
      return RejectReason::kOneLetterSequence;
    }
  }
  for (const std::string &morph : morphs) {
    auto it = prev_usage.find(morph);
    if (it != prev_usage.end() && it->second == 1) {
      return RejectReason::kRareMorph;
    }
  }
  return RejectReason::kAccept;
}

double MlCostFromStats(const MorphStats &stats) {
  if (stats.total <= 0) return 0.0;
  std::vector<int64_t> counts;
  counts.reserve(stats.counts.size());
  for (const auto &entry : stats.counts) counts.push_back(entry.second);
  std::sort(counts.begin(), counts.end());
  double bits = 0.0;
  const double total = static_cast<double>(stats.total);
  for (int64_t count : counts) {
    double c = static_cast<double>(count);
    bits += -c * std::log2(c / total);
  }
  return bits;
}

double MlCost(const Segmentation &segmentation,
              const TypeCounts &type_counts) {
  for (const auto &entry : type_counts) {
    if (segmentation.find(entry.first) == segmentation.end()) {
      Fail(ErrorCode::kInvalidArgument,
           "word type '" + entry.first + "' has no segmentation");
    }
  }
  return MlCostFromStats(EstimateStats(segmentation, type_counts));
}

void MlConfig::Validate() const {
  if (iterations < 1) {
    Fail(ErrorCode::kInvalidArgument, "iterations must be at least 1");
  }
  PoissonSampler check(lambda);
  (void)check;
}

MlModel TrainEm(const Corpus &corpus, const MlConfig &config) {
  config.Validate();
  if (corpus.empty()) Fail(ErrorCode::kEmptyCorpus, "empty training corpus");
  const TypeCounts &types = corpus.type_counts();
  Rng rng(config.seed);
  PoissonSampler sampler(config.lambda);

  MlModel model;
  for (const auto &entry : types) {
    model.segmentation[entry.first] = RandomSegment(entry.first, rng, sampler);
  }
  model.cost_history.push_back(MlCost(model.segmentation, types));

  for (int iter = 1; iter <= config.iterations; ++iter) {
    const bool last = iter == config.iterations;
    MorphStats stats = EstimateStats(model.segmentation, types);
    Segmentation next;
    for (const auto &entry : types) {
      const std::string &word = entry.first;
      std::optional<ViterbiResult> best = ViterbiSegment(word, stats);
      Morphs morphs;
      if (!best) {
        morphs = (last || !config.reject)
                     ? model.segmentation.at(word)
                     : RandomSegment(word, rng, sampler);
      } else {
        morphs = std::move(best->morphs);
        if (!last && config.reject &&
            Reject(morphs, stats.type_usage) != RejectReason::kAccept) {
          morphs = RandomSegment(word, rng, sampler);
        }
      }
      next.emplace(word, std::move(morphs));
    }
    model.segmentation = std::move(next);
    model.cost_history.push_back(MlCost(model.segmentation, types));
  }
  model.stats = EstimateStats(model.segmentation, types);
  return model;
}

Segmentation SegmentWithStats(const std::vector<std::string> &words,
                              const MorphStats &stats, Rng &rng,
                              const PoissonSampler &sampler) {
  std::set<std::string> unique(words.begin(), words.end());
  Segmentation out;
  for (const std::string &word : unique) {
    std::optional<ViterbiResult> best = ViterbiSegment(word, stats);
    out.emplace(word, best ? std::move(best->morphs)
                           : RandomSegment(word, rng, sampler));
  }
  return out;
}

}  // namespace morphseg
