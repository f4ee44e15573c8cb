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

#ifndef MORPHSEG_CORPUS_H_
#define MORPHSEG_CORPUS_H_

#include <cstdint>
#include <istream>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace morphseg {

// Word type -> number of occurrences. Ordered, so iteration is deterministic.
using TypeCounts = std::map<std::string, int64_t>;

// Set of characters a word may consist of.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::set<char32_t> chars) : chars_(std::move(chars)) {}

  // Named presets ("finnish", "english") or an explicit character list.
  // Explicit lists accept ranges written as "a-z"; a '-' at either end of
  // the list is literal.
  static Alphabet Parse(std::string_view spec);
  static Alphabet Finnish();
  static Alphabet English();

  bool Contains(char32_t cp) const { return chars_.count(cp) > 0; }
  size_t size() const { return chars_.size(); }
  bool empty() const { return chars_.empty(); }
  const std::set<char32_t> &chars() const { return chars_; }

  // Throws kInvalidArgument unless 0 < size() <= 2^char_bits.
  void CheckCodable(int char_bits) const;

 private:
  std::set<char32_t> chars_;
};

struct PreprocessConfig {
  Alphabet alphabet = Alphabet::English();
  bool lowercase = true;
};

// An ordered token stream with its type counts. Immutable once built.
class Corpus {
 public:
  Corpus() = default;
  explicit Corpus(std::vector<std::string> tokens);

  const std::vector<std::string> &tokens() const { return tokens_; }
  const TypeCounts &type_counts() const { return type_counts_; }
  size_t size() const { return tokens_.size(); }
  bool empty() const { return tokens_.empty(); }

  // Tokens separated by single spaces, 16 per line.
  std::string Serialize() const;

  bool operator==(const Corpus &other) const {
    return tokens_ == other.tokens_;
  }

 private:
  std::vector<std::string> tokens_;
  TypeCounts type_counts_;
};

// Reads whitespace-separated UTF-8 text. Tokens are lowercased when
// configured, and any token with a character outside the alphabet is dropped
// whole. Throws kInput on malformed UTF-8 and kEmptyCorpus if nothing
// survives.
Corpus LoadCorpus(std::istream &in, const PreprocessConfig &config);
Corpus LoadCorpusFromString(std::string_view text,
                            const PreprocessConfig &config);

// First n_train tokens and the following n_test tokens. The training part
// must be non-empty; the test part may be empty when n_test is zero.
std::pair<Corpus, Corpus> SplitCorpus(const Corpus &corpus, size_t n_train,
                                      size_t n_test);

}  // namespace morphseg

#endif  // MORPHSEG_CORPUS_H_
