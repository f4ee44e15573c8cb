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

#include "morphseg/corpus.h"

#include <sstream>

#include "morphseg/errors.h"
#include "morphseg/text.h"

namespace morphseg {

namespace {

std::set<char32_t> Range(char32_t first, char32_t last) {
  std::set<char32_t> chars;
  for (char32_t c = first; c <= last; ++c) chars.insert(c);
  return chars;
}

// Keeps a token if every character is in the alphabet. Returns false for
// tokens that must be dropped.
bool Normalize(std::string_view raw, const PreprocessConfig &config,
               size_t line_number, std::string *token) {
  std::u32string decoded;
  if (!DecodeUtf8(raw, &decoded)) {
    Fail(ErrorCode::kInput,
         "invalid UTF-8 on line " + std::to_string(line_number));
  }
  for (char32_t &cp : decoded) {
    if (config.lowercase) cp = ToLower(cp);
    if (!config.alphabet.Contains(cp)) return false;
  }
  *token = EncodeUtf8(decoded);
  return true;
}

}  // namespace

Alphabet Alphabet::Finnish() {
  std::set<char32_t> chars = Range(U'a', U'z');
  chars.insert({U'å', U'ä', U'ö', U'-'});
  return Alphabet(std::move(chars));
}

Alphabet Alphabet::English() {
  std::set<char32_t> chars = Range(U'a', U'z');
  chars.insert({U'\'', U'-'});
  return Alphabet(std::move(chars));
}

Alphabet Alphabet::Parse(std::string_view spec) {
  if (spec == "finnish") return Finnish();
  if (spec == "english") return English();
  std::u32string decoded;
  if (!DecodeUtf8(spec, &decoded)) {
    Fail(ErrorCode::kInvalidArgument, "alphabet is not valid UTF-8");
  }
  std::set<char32_t> chars;
  for (size_t i = 0; i < decoded.size(); ++i) {
    if (i + 2 < decoded.size() && decoded[i + 1] == U'-') {
      char32_t first = decoded[i], last = decoded[i + 2];
      if (first > last) {
        Fail(ErrorCode::kInvalidArgument, "descending range in alphabet");
      }
      auto range = Range(first, last);
      chars.insert(range.begin(), range.end());
      i += 2;
    } else {
      chars.insert(decoded[i]);
    }
  }
  if (chars.empty()) Fail(ErrorCode::kInvalidArgument, "empty alphabet");
  return Alphabet(std::move(chars));
}

void Alphabet::CheckCodable(int char_bits) const {
  if (chars_.empty()) Fail(ErrorCode::kInvalidArgument, "empty alphabet");
  if (char_bits < 1 || char_bits > 32) {
    Fail(ErrorCode::kInvalidArgument, "char_bits must be in [1, 32]");
  }
  if (char_bits < 32 && chars_.size() > (uint64_t{1} << char_bits)) {
    Fail(ErrorCode::kInvalidArgument,
         "alphabet of " + std::to_string(chars_.size()) +
             " characters cannot be coded with " + std::to_string(char_bits) +
             " bits per character");
  }
}

Corpus::Corpus(std::vector<std::string> tokens) : tokens_(std::move(tokens)) {
  for (const std::string &token : tokens_) ++type_counts_[token];
}

std::string Corpus::Serialize() const {
  std::string out;
  for (size_t i = 0; i < tokens_.size(); ++i) {
    out += tokens_[i];
    out += (i % 16 == 15 || i + 1 == tokens_.size()) ? '\n' : ' ';
  }
  return out;
}

Corpus LoadCorpus(std::istream &in, const PreprocessConfig &config) {
  if (config.alphabet.empty()) {
    Fail(ErrorCode::kInvalidArgument, "empty alphabet");
  }
  std::vector<std::string> tokens;
  std::string line;
  size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    std::string token;
    for (std::string_view raw : SplitWhitespace(line)) {
      if (Normalize(raw, config, line_number, &token)) {
        tokens.push_back(std::move(token));
      }
    }
  }
  if (in.bad()) Fail(ErrorCode::kIo, "read error while loading corpus");
  if (tokens.empty()) {
    Fail(ErrorCode::kEmptyCorpus, "no tokens survive preprocessing");
  }
  return Corpus(std::move(tokens));
}

Corpus LoadCorpusFromString(std::string_view text,
                            const PreprocessConfig &config) {
  std::istringstream in{std::string(text)};
  return LoadCorpus(in, config);
}

std::pair<Corpus, Corpus> SplitCorpus(const Corpus &corpus, size_t n_train,
                                      size_t n_test) {
  if (n_train == 0) {
    Fail(ErrorCode::kEmptyCorpus, "training part would be empty");
  }
  if (n_train > corpus.size() || n_test > corpus.size() - n_train) {
    Fail(ErrorCode::kSize, "corpus has " + std::to_string(corpus.size()) +
                               " tokens, need " +
                               std::to_string(n_train + n_test));
  }
  const auto &tokens = corpus.tokens();
  auto mid = tokens.begin() + static_cast<std::ptrdiff_t>(n_train);
  std::vector<std::string> train(tokens.begin(), mid);
  std::vector<std::string> test(mid,
                                mid + static_cast<std::ptrdiff_t>(n_test));
  return {Corpus(std::move(train)), Corpus(std::move(test))};
}

}  // namespace morphseg
