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

#ifndef MORPHSEG_ERRORS_H_
#define MORPHSEG_ERRORS_H_

#include <stdexcept>
#include <string>

namespace morphseg {

// Error categories. The numeric values are part of the C API.
enum class ErrorCode {
  kOk = 0,
  kInvalidArgument = 1,
  kInput = 2,          // undecodable or otherwise unusable input text
  kEmptyCorpus = 3,
  kSize = 4,           // not enough tokens for the requested split
  kNotTrained = 5,     // word unknown to the model
  kParse = 6,          // malformed file record
  kVersion = 7,        // unknown file format version
  kIo = 8,
  kUnsegmentable = 9,
  kInternal = 10,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string &message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void Fail(ErrorCode code, const std::string &message) {
  throw Error(code, message);
}

}  // namespace morphseg

#endif  // MORPHSEG_ERRORS_H_
