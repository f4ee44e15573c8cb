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


// Reference implementations used to check the library by exhaustive search
// or recomputation from explicit token lists.

#ifndef MORPHSEG_TESTS_ORACLES_H_
#define MORPHSEG_TESTS_ORACLES_H_

#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "morphseg/evaluator.h"
#include "morphseg/mdl_model.h"
#include "morphseg/ml_model.h"

namespace oracle {

// Code points in a valid UTF-8 string.
inline size_t Utf8Length(const std::string &s) {
  size_t n = 0;
  for (unsigned char c : s) n += (c & 0xC0) != 0x80;
  return n;
}

// Byte offset of the character at position `chars`.
inline size_t Utf8Offset(const std::string &s, size_t chars) {
  size_t i = 0;
  while (chars > 0 && i < s.size()) {
    ++i;
    while (i < s.size() && (static_cast<unsigned char>(s[i]) & 0xC0) == 0x80) {
      ++i;
    }
    --chars;
  }
  return i;
}

inline void TraceLeaves(const morphseg::ChunkStore &store,
                        const std::string &text,
                        std::vector<std::string> *out) {
  const auto &chunks = store.chunks();
  auto it = chunks.find(text);
  if (it == chunks.end() || it->second.split == 0) {
    out->push_back(text);
    return;
  }
  size_t cut = Utf8Offset(text, static_cast<size_t>(it->second.split));
  TraceLeaves(store, text.substr(0, cut), out);
  TraceLeaves(store, text.substr(cut), out);
}

// Morph-token sequence implied by every top-level word occurrence.
inline std::vector<std::string> MorphTokens(const morphseg::ChunkStore &store) {
  std::vector<std::string> tokens;
  std::map<std::string, int64_t> words(store.word_counts().begin(),
                                       store.word_counts().end());
  for (const auto &[word, count] : words) {
    std::vector<std::string> morphs;
    TraceLeaves(store, word, &morphs);
    for (int64_t i = 0; i < count; ++i) {
      tokens.insert(tokens.end(), morphs.begin(), morphs.end());
    }
  }
  return tokens;
}

struct Cost {
  double corpus_bits = 0.0;
  double codebook_bits = 0.0;
  double total() const { return corpus_bits + codebook_bits; }
};

// Two-part code length of an explicit morph-token list.
inline Cost TokenListCost(const std::vector<std::string> &tokens,
                          int char_bits) {
  std::map<std::string, int64_t> counts;
  for (const std::string &t : tokens) ++counts[t];
  Cost cost;
  const double n = static_cast<double>(tokens.size());
  for (const std::string &t : tokens) {
    cost.corpus_bits += -std::log2(static_cast<double>(counts[t]) / n);
  }
  for (const auto &entry : counts) {
    cost.codebook_bits += char_bits * static_cast<double>(Utf8Length(entry.first));
  }
  return cost;
}

inline Cost StoreCost(const morphseg::ChunkStore &store) {
  return TokenListCost(MorphTokens(store), store.char_bits());
}

inline double RelativeError(double a, double b) {
  double scale = std::max(std::fabs(a), std::fabs(b));
  return scale == 0.0 ? 0.0 : std::fabs(a - b) / scale;
}

// ML cost summed over the explicit morph-token list.
inline double MlTokenCost(const morphseg::Segmentation &seg,
                          const morphseg::TypeCounts &types) {
  std::vector<std::string> tokens;
  for (const auto &[word, count] : types) {
    for (int64_t i = 0; i < count; ++i) {
      const auto &morphs = seg.at(word);
      tokens.insert(tokens.end(), morphs.begin(), morphs.end());
    }
  }
  return TokenListCost(tokens, 0).corpus_bits;
}

struct Segmented {
  std::vector<std::string> morphs;
  double bits = 0.0;
};

// Cheapest segmentation over all 2^(n-1) cut sets; nullopt if none is fully
// covered by known morphs. Bits are summed left to right.
inline std::optional<Segmented> BruteViterbi(const std::string &word,
                                             const morphseg::MorphStats &stats) {
  size_t n = Utf8Length(word);
  std::optional<Segmented> best;
  for (uint64_t mask = 0; mask < (uint64_t{1} << (n - 1)); ++mask) {
    Segmented cand;
    size_t start = 0;
    bool ok = true;
    for (size_t pos = 1; pos <= n && ok; ++pos) {
      if (pos < n && !((mask >> (pos - 1)) & 1)) continue;
      size_t a = Utf8Offset(word, start), b = Utf8Offset(word, pos);
      std::string morph = word.substr(a, b - a);
      std::optional<double> bits = stats.Bits(morph);
      if (!bits) {
        ok = false;
      } else {
        cand.bits += *bits;
        cand.morphs.push_back(morph);
      }
      start = pos;
    }
    if (!ok) continue;
    if (!best || cand.bits < best->bits) best = cand;
  }
  return best;
}

// Minimum path score over every monotone contiguous path from (0,0) to
// (n-1,m-1), cell scores summed in path order.
inline double BruteAlign(size_t n, size_t m,
                         const std::function<double(size_t, size_t)> &score) {
  double best = std::numeric_limits<double>::infinity();
  std::function<void(size_t, size_t, double)> walk = [&](size_t i, size_t j,
                                                         double sum) {
    sum += score(i, j);
    if (i == n - 1 && j == m - 1) {
      best = std::min(best, sum);
      return;
    }
    if (i + 1 < n && j + 1 < m) walk(i + 1, j + 1, sum);
    if (i + 1 < n) walk(i + 1, j, sum);
    if (j + 1 < m) walk(i, j + 1, sum);
  };
  walk(0, 0, 0.0);
  return best;
}

// Chunk records with the subtree under `word` collapsed into a single leaf,
// i.e. the state right after inserting the word unsplit.
inline std::map<std::string, morphseg::Chunk> CollapseWord(
    const morphseg::ChunkStore &store, const std::string &word) {
  std::map<std::string, morphseg::Chunk> chunks(store.chunks().begin(),
                                                store.chunks().end());
  morphseg::Chunk &top = chunks.at(word);
  const int64_t count = top.count;
  std::function<void(const std::string &)> drop = [&](const std::string &t) {
    morphseg::Chunk &c = chunks.at(t);
    size_t cut = Utf8Offset(t, static_cast<size_t>(c.split));
    std::string left = t.substr(0, cut), right = t.substr(cut);
    for (const std::string &child : {left, right}) {
      morphseg::Chunk &cc = chunks.at(child);
      if (cc.split != 0) drop(child);
      cc.count -= count;
    }
  };
  if (top.split != 0) drop(word);
  top.split = 0;
  for (auto it = chunks.begin(); it != chunks.end();) {
    it = it->second.count == 0 ? chunks.erase(it) : std::next(it);
  }
  return chunks;
}

}  // namespace oracle

#endif  // MORPHSEG_TESTS_ORACLES_H_
