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


#ifndef MORPHSEG_TESTS_ERROR_CODE_H_
#define MORPHSEG_TESTS_ERROR_CODE_H_

#include <functional>
#include <string>

#include "morphseg/errors.h"

namespace morphseg {

// Runs fn and returns the code of the morphseg::Error it throws, or kOk.
inline ErrorCode CodeOf(const std::function<void()> &fn,
                        std::string *message = nullptr) {
  try {
    fn();
  } catch (const Error &e) {
    if (message != nullptr) *message = e.what();
    return e.code();
  }
  return ErrorCode::kOk;
}

}  // namespace morphseg

#endif  // MORPHSEG_TESTS_ERROR_CODE_H_
