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

#include "morphseg/mdl_model.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "morphseg/errors.h"
#include "morphseg/text.h"

namespace morphseg {

namespace {

// A split must beat the best option so far by more than this many bits.
constexpr double kSplitEpsilon = 1e-7;

double XLog2X(int64_t x) {
  if (x <= 0) return 0.0;
  double v = static_cast<double>(x);
  return v * std::log2(v);
}

// (x + d) log2 (x + d) - x log2 x without cancellation for large x.
double XLog2XDelta(int64_t x, int64_t d) {
  if (d == 0) return 0.0;
  int64_t y = x + d;
  if (x <= 0) return XLog2X(y);
  if (y <= 0) return -XLog2X(x);
  double dx = static_cast<double>(x), dd = static_cast<double>(d);
  return dd * std::log2(static_cast<double>(y)) +
         dx * std::log1p(dd / dx) / std::log(2.0);
}

size_t ByteOffset(std::string_view text, int32_t chars) {
  size_t i = 0;
  int32_t seen = 0;
  for (; i < text.size(); ++i) {
    if ((static_cast<unsigned char>(text[i]) & 0xC0) != 0x80) {
      if (seen == chars) return i;
      ++seen;
    }
  }
  return i;
}

void CheckWord(std::string_view word) {
  if (word.empty()) Fail(ErrorCode::kInvalidArgument, "empty word");
  std::u32string decoded;
  if (!DecodeUtf8(word, &decoded)) {
    Fail(ErrorCode::kInvalidArgument, "word is not valid UTF-8");
  }
  for (char32_t cp : decoded) {
    if (cp < 0x20 || cp == U' ' || cp == 0x7F) {
      Fail(ErrorCode::kInvalidArgument,
           "word contains whitespace or control characters");
    }
  }
}

}  // namespace

void MdlConfig::Validate() const {
  if (char_bits < 1 || char_bits > 32) {
    Fail(ErrorCode::kInvalidArgument, "char_bits must be in [1, 32]");
  }
  if (dream_interval < 0 || curve_interval < 0) {
    Fail(ErrorCode::kInvalidArgument, "intervals must be non-negative");
  }
  if (dream_max_passes < 1) {
    Fail(ErrorCode::kInvalidArgument, "dream_max_passes must be positive");
  }
  if (!(dream_min_improvement >= 0.0)) {
    Fail(ErrorCode::kInvalidArgument,
         "dream_min_improvement must be non-negative");
  }
}

ChunkStore::ChunkStore(int char_bits) : char_bits_(char_bits) {
  if (char_bits < 1 || char_bits > 32) {
    Fail(ErrorCode::kInvalidArgument, "char_bits must be in [1, 32]");
  }
}

ChunkStore ChunkStore::FromChunks(int char_bits,
                                  const std::map<std::string, Chunk> &chunks) {
  ChunkStore store(char_bits);
  std::map<std::string, int64_t> inflow;
  for (const auto &[text, chunk] : chunks) {
    if (text.empty()) Fail(ErrorCode::kParse, "empty chunk text");
    if (chunk.count <= 0) {
      Fail(ErrorCode::kParse, "chunk '" + text + "' has non-positive count");
    }
    size_t length = CharLength(text);
    if (chunk.split < 0 || static_cast<size_t>(chunk.split) >= length) {
      Fail(ErrorCode::kParse, "chunk '" + text + "' has split out of range");
    }
    if (chunk.split > 0) {
      size_t off = ByteOffset(text, chunk.split);
      inflow[text.substr(0, off)] += chunk.count;
      inflow[text.substr(off)] += chunk.count;
    }
    store.chunks_.emplace(text, chunk);
  }
  for (const auto &[text, flow] : inflow) {
    auto it = chunks.find(text);
    if (it == chunks.end()) {
      Fail(ErrorCode::kParse, "split part '" + text + "' has no record");
    }
    if (it->second.count < flow) {
      Fail(ErrorCode::kParse,
           "chunk '" + text + "' has a lower count than its parents");
    }
  }
  for (const auto &[text, chunk] : chunks) {
    auto it = inflow.find(text);
    int64_t own = chunk.count - (it == inflow.end() ? 0 : it->second);
    if (own > 0) store.word_counts_[text] = own;
  }
  store.RecomputeAggregates();
  std::string problem = store.CheckConsistency();
  if (!problem.empty()) Fail(ErrorCode::kParse, problem);
  return store;
}

const Chunk *ChunkStore::Find(const std::string &text) const {
  auto it = chunks_.find(text);
  return it == chunks_.end() ? nullptr : &it->second;
}

std::vector<std::string> ChunkStore::Words() const {
  std::vector<std::string> words;
  words.reserve(word_counts_.size());
  for (const auto &entry : word_counts_) words.push_back(entry.first);
  std::sort(words.begin(), words.end());
  return words;
}

MdlCost ChunkStore::TrackedCost() const {
  MdlCost cost;
  if (leaf_tokens_ > 0) {
    cost.corpus_bits = XLog2X(leaf_tokens_) - (clogc_sum_ + clogc_comp_);
    if (cost.corpus_bits < 0.0) cost.corpus_bits = 0.0;
  }
  cost.codebook_bits =
      static_cast<double>(char_bits_) * static_cast<double>(leaf_chars_);
  cost.total_bits = cost.corpus_bits + cost.codebook_bits;
  return cost;
}

void ChunkStore::UpdateLeaf(size_t length, int64_t old_count,
                            int64_t new_count) {
  if (old_count == new_count) return;
  leaf_tokens_ += new_count - old_count;
  if (old_count == 0) {
    ++num_leaves_;
    leaf_chars_ += static_cast<int64_t>(length);
  } else if (new_count == 0) {
    --num_leaves_;
    leaf_chars_ -= static_cast<int64_t>(length);
  }
  // Neumaier summation keeps the running sum within a few ulps of the sum
  // recomputed from scratch.
  double x = XLog2X(new_count) - XLog2X(old_count);
  double t = clogc_sum_ + x;
  if (std::fabs(clogc_sum_) >= std::fabs(x)) {
    clogc_comp_ += (clogc_sum_ - t) + x;
  } else {
    clogc_comp_ += (x - t) + clogc_sum_;
  }
  clogc_sum_ = t;
}

void ChunkStore::RecomputeAggregates() {
  num_leaves_ = 0;
  leaf_tokens_ = 0;
  leaf_chars_ = 0;
  clogc_sum_ = 0.0;
  clogc_comp_ = 0.0;
  std::vector<std::pair<std::string, int64_t>> leaves;
  for (const auto &[text, chunk] : chunks_) {
    if (chunk.is_leaf()) leaves.emplace_back(text, chunk.count);
  }
  // Sorted so the floating-point sum does not depend on hash order.
  std::sort(leaves.begin(), leaves.end());
  for (const auto &[text, count] : leaves) {
    UpdateLeaf(CharLength(text), 0, count);
  }
}

void ChunkStore::AddCount(const std::string &text, int64_t delta) {
  auto it = chunks_.find(text);
  if (it == chunks_.end()) {
    if (delta < 0) {
      Fail(ErrorCode::kInternal, "decrement of missing chunk '" + text + "'");
    }
    it = chunks_.emplace(text, Chunk{}).first;
  }
  Chunk &chunk = it->second;
  int64_t new_count = chunk.count + delta;
  if (new_count < 0) {
    Fail(ErrorCode::kInternal, "negative count for chunk '" + text + "'");
  }
  if (chunk.is_leaf()) {
    UpdateLeaf(CharLength(it->first), chunk.count, new_count);
    chunk.count = new_count;
    if (new_count == 0) chunks_.erase(it);
    return;
  }
  size_t off = ByteOffset(it->first, chunk.split);
  std::string left = it->first.substr(0, off);
  std::string right = it->first.substr(off);
  chunk.count = new_count;
  if (new_count == 0) chunks_.erase(it);
  AddCount(left, delta);
  AddCount(right, delta);
}

void ChunkStore::CollectLeafDeltas(const std::string &text, int64_t delta,
                                   LeafDeltas *deltas) const {
  auto it = chunks_.find(text);
  if (it != chunks_.end() && !it->second.is_leaf()) {
    size_t off = ByteOffset(text, it->second.split);
    CollectLeafDeltas(text.substr(0, off), delta, deltas);
    CollectLeafDeltas(text.substr(off), delta, deltas);
    return;
  }
  for (auto &entry : *deltas) {
    if (entry.first == text) {
      entry.second += delta;
      return;
    }
  }
  deltas->emplace_back(text, delta);
}

// Change in total cost if the leaf `text` (count `count`) were split at
// byte_split, with the count flowing through any existing structure of the
// two parts.
double ChunkStore::SplitDelta(const std::string &text, int64_t count,
                              size_t byte_split) const {
  LeafDeltas deltas;
  deltas.emplace_back(text, -count);
  CollectLeafDeltas(text.substr(0, byte_split), count, &deltas);
  CollectLeafDeltas(text.substr(byte_split), count, &deltas);

  int64_t token_delta = 0;
  double clogc_delta = 0.0;
  int64_t char_delta = 0;
  for (const auto &[leaf, d] : deltas) {
    if (d == 0) continue;
    auto it = chunks_.find(leaf);
    int64_t old_count = it == chunks_.end() ? 0 : it->second.count;
    int64_t new_count = old_count + d;
    token_delta += d;
    clogc_delta += XLog2XDelta(old_count, d);
    if (old_count == 0 && new_count > 0) {
      char_delta += static_cast<int64_t>(CharLength(leaf));
    } else if (old_count > 0 && new_count == 0) {
      char_delta -= static_cast<int64_t>(CharLength(leaf));
    }
  }
  return XLog2XDelta(leaf_tokens_, token_delta) - clogc_delta +
         static_cast<double>(char_bits_) * static_cast<double>(char_delta);
}

void ChunkStore::RecursiveSplit(const std::string &text_in) {
  // Copy: the argument may alias a key that is erased below.
  const std::string text = text_in;
  auto it = chunks_.find(text);
  if (it == chunks_.end() || it->second.count <= 0) {
    Fail(ErrorCode::kInternal, "recursive split of unknown chunk '" + text +
                                   "'");
  }
  const int64_t count = it->second.count;
  std::vector<size_t> bounds = CharBoundaries(text);
  const size_t length = bounds.size() - 1;

  if (!it->second.is_leaf()) {
    size_t off = bounds[static_cast<size_t>(it->second.split)];
    it->second.split = 0;
    UpdateLeaf(length, 0, count);
    AddCount(text.substr(0, off), -count);
    AddCount(text.substr(off), -count);
  }
  if (length < 2) return;

  double best_delta = 0.0;
  size_t best_split = 0;
  for (size_t i = 1; i < length; ++i) {
    double delta = SplitDelta(text, count, bounds[i]);
    if (delta < best_delta - kSplitEpsilon) {
      best_delta = delta;
      best_split = i;
    }
  }
  if (best_split == 0) return;

  Chunk &chunk = chunks_.at(text);
  UpdateLeaf(length, count, 0);
  chunk.split = static_cast<int32_t>(best_split);
  std::string left = text.substr(0, bounds[best_split]);
  std::string right = text.substr(bounds[best_split]);
  AddCount(left, count);
  AddCount(right, count);
  RecursiveSplit(left);
  if (right != left) RecursiveSplit(right);
}

void ChunkStore::ProcessWord(std::string_view word_view) {
  CheckWord(word_view);
  std::string word(word_view);
  auto it = chunks_.find(word);
  int64_t count = it == chunks_.end() ? 0 : it->second.count;
  if (count > 0) AddCount(word, -count);
  AddCount(word, count + 1);
  ++word_counts_[word];
  RecursiveSplit(word);
}

std::vector<std::string> ChunkStore::Segment(std::string_view word) const {
  std::vector<std::string> morphs;
  std::vector<std::string> stack{std::string(word)};
  if (chunks_.find(stack.back()) == chunks_.end()) {
    Fail(ErrorCode::kNotTrained,
         "word '" + std::string(word) + "' is not in the model");
  }
  while (!stack.empty()) {
    std::string text = std::move(stack.back());
    stack.pop_back();
    auto it = chunks_.find(text);
    if (it == chunks_.end()) {
      Fail(ErrorCode::kInternal, "dangling split part '" + text + "'");
    }
    if (it->second.is_leaf()) {
      morphs.push_back(std::move(text));
      continue;
    }
    size_t off = ByteOffset(text, it->second.split);
    stack.push_back(text.substr(off));
    stack.push_back(text.substr(0, off));
  }
  return morphs;
}

int ChunkStore::Dream(Rng &rng, int max_passes, double min_improvement) {
  std::vector<std::string> words = Words();
  int passes = 0;
  while (passes < max_passes && !words.empty()) {
    double before = TrackedCost().total_bits;
    rng.Shuffle(&words);
    for (const std::string &word : words) RecursiveSplit(word);
    ++passes;
    double after = TrackedCost().total_bits;
    if (before - after < min_improvement * before) break;
  }
  return passes;
}

std::string ChunkStore::CheckConsistency() const {
  std::unordered_map<std::string, int64_t> expected;
  for (const auto &[word, count] : word_counts_) {
    if (count <= 0) return "word '" + word + "' has non-positive count";
    expected[word] += count;
  }
  size_t leaves = 0;
  int64_t tokens = 0, chars = 0;
  for (const auto &[text, chunk] : chunks_) {
    if (chunk.count <= 0) return "chunk '" + text + "' has zero count";
    size_t length = CharLength(text);
    if (chunk.split < 0 || static_cast<size_t>(chunk.split) >= length) {
      return "chunk '" + text + "' has split out of range";
    }
    if (chunk.is_leaf()) {
      ++leaves;
      tokens += chunk.count;
      chars += static_cast<int64_t>(length);
      continue;
    }
    size_t off = ByteOffset(text, chunk.split);
    expected[text.substr(0, off)] += chunk.count;
    expected[text.substr(off)] += chunk.count;
  }
  for (const auto &[text, count] : expected) {
    auto it = chunks_.find(text);
    if (it == chunks_.end()) return "missing chunk '" + text + "'";
    if (it->second.count != count) {
      return "chunk '" + text + "' has count " +
             std::to_string(it->second.count) + ", flow gives " +
             std::to_string(count);
    }
  }
  if (expected.size() != chunks_.size()) {
    return "store holds chunks that no word reaches";
  }
  if (leaves != num_leaves_ || tokens != leaf_tokens_ ||
      chars != leaf_chars_) {
    return "leaf aggregates out of date";
  }
  int64_t traced = 0;
  for (const auto &[word, count] : word_counts_) {
    traced += count * static_cast<int64_t>(Segment(word).size());
  }
  if (traced != leaf_tokens_) return "leaf counts disagree with word traces";
  double tracked = TrackedCost().total_bits;
  double recomputed = TotalCost(*this).total_bits;
  if (std::fabs(tracked - recomputed) >
      1e-9 * std::max(1.0, std::fabs(recomputed))) {
    return "tracked cost " + FormatDouble(tracked) + " != recomputed " +
           FormatDouble(recomputed);
  }
  return {};
}

MdlCost TotalCost(const ChunkStore &store) {
  std::vector<std::pair<std::string, int64_t>> leaves;
  for (const auto &[text, chunk] : store.chunks()) {
    if (chunk.is_leaf()) leaves.emplace_back(text, chunk.count);
  }
  std::sort(leaves.begin(), leaves.end());
  int64_t total = 0;
  for (const auto &leaf : leaves) total += leaf.second;
  MdlCost cost;
  for (const auto &[text, count] : leaves) {
    double p = static_cast<double>(count) / static_cast<double>(total);
    cost.corpus_bits += -static_cast<double>(count) * std::log2(p);
    cost.codebook_bits += static_cast<double>(store.char_bits()) *
                          static_cast<double>(CharLength(text));
  }
  cost.total_bits = cost.corpus_bits + cost.codebook_bits;
  return cost;
}

ChunkStore TrainOnline(const Corpus &corpus, const MdlConfig &config,
                       std::vector<CostPoint> *curve) {
  config.Validate();
  if (corpus.empty()) Fail(ErrorCode::kEmptyCorpus, "empty training corpus");
  std::set<char32_t> seen;
  std::u32string decoded;
  for (const auto &[word, count] : corpus.type_counts()) {
    DecodeUtf8(word, &decoded);
    seen.insert(decoded.begin(), decoded.end());
  }
  Alphabet(std::move(seen)).CheckCodable(config.char_bits);

  ChunkStore store(config.char_bits);
  Rng rng(config.seed);
  auto record = [&](int64_t processed) {
    if (curve == nullptr) return;
    if (!curve->empty() && curve->back().tokens_processed == processed &&
        curve->back().avg_word_cost_bits ==
            store.TrackedCost().total_bits / static_cast<double>(processed)) {
      return;
    }
    curve->push_back({processed, store.TrackedCost().total_bits /
                                     static_cast<double>(processed)});
  };

  int64_t processed = 0;
  for (const std::string &token : corpus.tokens()) {
    store.ProcessWord(token);
    ++processed;
    if (config.curve_interval > 0 && processed % config.curve_interval == 0) {
      record(processed);
    }
    if (config.dream_interval > 0 && processed % config.dream_interval == 0) {
      record(processed);
      store.Dream(rng, config.dream_max_passes, config.dream_min_improvement);
      record(processed);
    }
  }
  record(processed);
  return store;
}

void LearnUnknownWords(const std::vector<std::string> &tokens,
                       ChunkStore *store) {
  std::set<std::string> unknown;
  for (const std::string &token : tokens) {
    if (store->Find(token) == nullptr) unknown.insert(token);
  }
  for (const std::string &token : tokens) {
    if (unknown.count(token) > 0) store->ProcessWord(token);
  }
}

}  // namespace morphseg
