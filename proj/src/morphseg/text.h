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

// UTF-8 helpers. All strings in the library are UTF-8; lengths and split
// positions are measured in code points.

#ifndef MORPHSEG_TEXT_H_
#define MORPHSEG_TEXT_H_

#include <string>
#include <string_view>
#include <vector>

namespace morphseg {

// Decodes UTF-8. Returns false on malformed, overlong or surrogate sequences.
bool DecodeUtf8(std::string_view text, std::u32string *out);

void AppendUtf8(char32_t cp, std::string *out);
std::string EncodeUtf8(std::u32string_view text);

// Byte offsets of every code point start plus the end offset, so a string of
// n code points yields n + 1 entries. Input must be valid UTF-8.
std::vector<size_t> CharBoundaries(std::string_view text);

// Number of code points in valid UTF-8.
size_t CharLength(std::string_view text);

// Simple lowercase mapping for ASCII and Latin-1 letters.
char32_t ToLower(char32_t cp);

// Lowercases a valid UTF-8 string with ToLower.
std::string LowercaseUtf8(std::string_view text);

inline bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
         c == '\f';
}

// Splits on runs of ASCII whitespace.
std::vector<std::string_view> SplitWhitespace(std::string_view text);

// Splits on a single delimiter, keeping empty fields.
std::vector<std::string_view> SplitFields(std::string_view text, char delim);

// Shortest decimal representation that parses back to the same double.
std::string FormatDouble(double value);
bool ParseDouble(std::string_view text, double *value);
bool ParseInt64(std::string_view text, long long *value);

}  // namespace morphseg

#endif  // MORPHSEG_TEXT_H_
