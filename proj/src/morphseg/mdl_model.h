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

// Online recursive segmentation under a two-part code length:
//
//   cost = sum over morph tokens of -log2 p(m) + sum over morph types of k*len
//
// where p(m) is the relative token frequency of morph m. Words are kept in a
// shared hierarchy of chunks. A chunk is either a leaf (a morph in the
// codebook) or is split in two at a character position; counts flow from a
// chunk down to both of its parts, so the count of any chunk equals the
// number of times it occurs as a word plus the counts of the chunks that
// split into it. Only leaves are charged in the cost.

#ifndef MORPHSEG_MDL_MODEL_H_
#define MORPHSEG_MDL_MODEL_H_

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "morphseg/corpus.h"
#include "morphseg/rng.h"

namespace morphseg {

struct Chunk {
  int64_t count = 0;
  // Split position in characters; 0 marks a leaf.
  int32_t split = 0;

  bool is_leaf() const { return split == 0; }
  bool operator==(const Chunk &other) const = default;
};

struct MdlCost {
  double corpus_bits = 0.0;
  double codebook_bits = 0.0;
  double total_bits = 0.0;
};

struct MdlConfig {
  int char_bits = 5;
  // Tokens between dreaming events; 0 disables dreaming.
  int64_t dream_interval = 20000;
  int dream_max_passes = 1;
  // A dreaming pass that lowers the total cost by less than this fraction
  // ends dreaming.
  double dream_min_improvement = 1e-4;
  // Tokens between cost-curve checkpoints; 0 records only dreaming events
  // and the final state.
  int64_t curve_interval = 1000;
  uint64_t seed = 42;

  void Validate() const;
};

struct CostPoint {
  int64_t tokens_processed = 0;
  double avg_word_cost_bits = 0.0;
};

class ChunkStore {
 public:
  explicit ChunkStore(int char_bits = 5);

  // Rebuilds a store from its chunk records. The number of times each chunk
  // was seen as a word is recovered from the count flow. Throws kParse if the
  // records do not form a consistent hierarchy.
  static ChunkStore FromChunks(int char_bits,
                               const std::map<std::string, Chunk> &chunks);

  int char_bits() const { return char_bits_; }
  const std::unordered_map<std::string, Chunk> &chunks() const {
    return chunks_;
  }
  const Chunk *Find(const std::string &text) const;

  // Top-level word occurrences.
  const std::unordered_map<std::string, int64_t> &word_counts() const {
    return word_counts_;
  }
  std::vector<std::string> Words() const;

  bool empty() const { return chunks_.empty(); }
  size_t num_morphs() const { return num_leaves_; }
  int64_t morph_tokens() const { return leaf_tokens_; }

  // Cost maintained incrementally as the store changes.
  MdlCost TrackedCost() const;

  // Reads one word token: removes the word's current analysis, re-inserts
  // it unsplit with its count incremented and re-splits it.
  void ProcessWord(std::string_view word);

  // Re-evaluates the chunk as a whole at its current count: no split or any
  // binary split, whichever gives the lowest total cost, recursing into both
  // parts of a committed split. Ties keep the chunk whole, then prefer the
  // leftmost split.
  void RecursiveSplit(const std::string &text);

  // Morphs of a chunk, traced through the split hierarchy. Throws
  // kNotTrained if the chunk is unknown.
  std::vector<std::string> Segment(std::string_view word) const;

  // Re-splits every known word in random order, for up to max_passes passes.
  // Returns the number of passes made.
  int Dream(Rng &rng, int max_passes, double min_improvement);

  // Empty if all invariants hold, otherwise a description of the first
  // violation found. Linear in the store size.
  std::string CheckConsistency() const;

 private:
  using LeafDeltas = std::vector<std::pair<std::string, int64_t>>;

  void AddCount(const std::string &text, int64_t delta);
  void UpdateLeaf(size_t length, int64_t old_count, int64_t new_count);
  void CollectLeafDeltas(const std::string &text, int64_t delta,
                         LeafDeltas *deltas) const;
  double SplitDelta(const std::string &text, int64_t count,
                    size_t byte_split) const;
  void RecomputeAggregates();

  int char_bits_;
  std::unordered_map<std::string, Chunk> chunks_;
  std::unordered_map<std::string, int64_t> word_counts_;

  // Leaf aggregates behind TrackedCost().
  size_t num_leaves_ = 0;
  int64_t leaf_tokens_ = 0;
  int64_t leaf_chars_ = 0;
  // Compensated running sum of c*log2(c) over leaves.
  double clogc_sum_ = 0.0;
  double clogc_comp_ = 0.0;
};

// Cost recomputed from scratch over the leaves of the store.
MdlCost TotalCost(const ChunkStore &store);

// Processes the corpus tokens in order, dreaming every dream_interval tokens.
// When curve is non-null, it receives the average cost per processed token at
// every checkpoint and immediately before and after each dreaming event.
ChunkStore TrainOnline(const Corpus &corpus, const MdlConfig &config,
                       std::vector<CostPoint> *curve = nullptr);

// Processes, in order, every token whose chunk is absent from the store, so
// that all tokens can be segmented afterwards. Tokens already present as a
// chunk are left alone.
void LearnUnknownWords(const std::vector<std::string> &tokens,
                       ChunkStore *store);

}  // namespace morphseg

#endif  // MORPHSEG_MDL_MODEL_H_
